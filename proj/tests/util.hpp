#pragma once

#include <doctest.h>

#include "oracle.hpp"
#include "serialize.hpp"

inline gk::Matrix M(const std::vector<std::vector<long>>& rows) { return gk::Matrix::from_ints(rows); }

inline oracle::Rows rows_of(const gk::Matrix& m) {
  oracle::Rows out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::Chain oracle_chain(const gk::ChainBundle& cb) {
  oracle::Chain c{cb.n, cb.degrees, {}};
  for (const auto& g : cb.gluings) c.gluings.push_back(rows_of(g));
  return c;
}

inline gk::ChainBundle chain(std::size_t n, std::vector<std::size_t> deg, std::vector<gk::Matrix> gl = {}) {
  gk::ChainBundle cb;
  cb.n = n;
  cb.degrees = std::move(deg);
  cb.gluings = std::move(gl);
  return cb;
}

inline const gk::Matrix& swap2() {
  static const gk::Matrix s = gk::Matrix::from_ints({{0, 1}, {1, 0}});
  return s;
}

// The n = 2 worked datum: side 1 is the swap-glued (1,1) chain, side 2 empty.
inline gk::GiesekerDatum worked_datum() {
  gk::GiesekerDatum d = gk::empty_datum(2);
  d.side1.chain = chain(2, {1, 1}, {swap2()});
  d.side1.attach = gk::Matrix::identity(2);
  return d;
}
