#include "correspondence.hpp"

namespace gk {

NormalForm normal_form_bf(const BfMorphism& b) {
  auto v = validate_bf(b);
  if (!v.empty()) throw std::invalid_argument("normal_form_bf: invalid bf-morphism: " + v[0]);
  const std::size_t n = b.n, d = n - b.bf_rank;
  NormalForm nf;
  nf.d = d;
  if (sgn(b.mu) != 0) {
    Matrix diag = Matrix::identity(n);
    for (std::size_t k = 0; k < d; ++k) diag(k, k) = b.mu;
    nf.p = Matrix::identity(n);
    nf.q = diag * inverse_or_throw(b.f);
    return nf;
  }
  // Basis p_1..p_n of E' and q_1..q_n of E with f p_k = 0, g q_k = p_k (k <= d)
  // and f p_k = q_k, g q_k = 0 (k > d).
  Subspace ker = kernel(b.f);
  Matrix pinv = hcat(ker.basis(), complement_basis(ker));
  Matrix qinv(n, n);
  auto top = solve(b.g, ker.basis());
  if (!top) throw std::logic_error("normal_form_bf: kernel of f outside image of g");
  qinv.place(0, 0, *top);
  qinv.place(0, d, b.f * pinv.cols_range(d, n));
  nf.p = inverse_or_throw(pinv);
  nf.q = inverse_or_throw(qinv);
  return nf;
}

BfMorphism random_bf(std::size_t n, std::size_t bf_rank, bool mu_zero, std::mt19937_64& rng) {
  const std::size_t d = n - bf_rank;
  Matrix p = random_invertible(n, -2, 2, rng), q = random_invertible(n, -2, 2, rng);
  Rational mu = mu_zero ? 0 : 1;
  Matrix df = Matrix::identity(n), dg = Matrix::identity(n);
  for (std::size_t k = 0; k < d; ++k) df(k, k) = mu;
  for (std::size_t k = d; k < n; ++k) dg(k, k) = mu;
  return {n, mu, inverse_or_throw(q) * df * p, inverse_or_throw(p) * dg * q, bf_rank};
}

ElementaryModification elementary_modification(std::size_t n, const Matrix& c, std::size_t d) {
  if (d < 1 || d > n) throw std::invalid_argument("elementary_modification: degree outside [1, n]");
  ElementaryModification em;
  em.n = n;
  em.d = d;
  em.w = preimage(c, Subspace::coords(n, 0, d));
  Matrix lift = complement_basis(em.w);
  em.new_basis = hcat(em.w.basis(), lift);
  em.quotient_inclusion = Matrix::identity(n).cols_range(d, n);
  em.w_projection = Matrix::identity(n).rows_range(0, d);
  em.quotient_to_g = (c * lift).rows_range(d, n);
  return em;
}

namespace {

Matrix endpoint_psi_apply_left(int side, const Matrix& phi, const Matrix& psi) {
  // Contraction replaces the endpoint fiber; psi maps the new endpoint to the old one.
  return side == 1 ? phi * psi : inverse_or_throw(psi) * phi;
}

struct SideContraction {
  AttachedChain chain;
  Matrix psi;
  BfMorphism bf;
};

// Contracts the last component of the side. Component coordinates follow the
// canonical model; the new last component (or the base fiber) gets the
// coordinates in which its F-part comes first and both transports are identity.
SideContraction contract_side(const AttachedChain& s, std::size_t n) {
  const std::size_t r = s.chain.length();
  const std::size_t d = s.chain.degrees.back();
  const Matrix& c = r >= 2 ? s.chain.gluings[r - 2] : *s.attach;
  const std::size_t a = r >= 2 ? s.chain.degrees[r - 2] : 0;

  Subspace w = preimage(c, Subspace::coords(n, 0, d));
  if (w.dim() != d) throw std::logic_error("contract: W has wrong dimension");
  Matrix wg = w.basis().rows_range(a, n);
  Subspace dsp = Subspace::span(wg);
  if (dsp.dim() != d) throw StructuralError("contract: W meets the F-part of the neighbour");
  Matrix mw = w.basis() * *solve(wg, dsp.basis());
  Matrix cpl = complement_basis(dsp);

  Matrix pl(n, n), reps(n, n);
  for (std::size_t k = 0; k < a; ++k) pl(k, k) = reps(k, k) = 1;
  pl.place(a, a, dsp.basis());
  pl.place(a, a + d, cpl);
  reps.place(0, a, mw);
  reps.place(a, a + d, cpl);

  Matrix t = c * reps;
  Matrix pf = proj_first(n, d), pg = proj_last(n, n - d);
  Matrix piw(n, n);
  for (std::size_t k = a; k < a + d; ++k) piw(k, k) = 1;
  Matrix psi = pf * t * piw + pg * t;

  SideContraction out;
  out.psi = psi;
  out.bf = {n, 0, inverse_or_throw(psi) * pg, pf * psi, n - d};
  out.chain.chain.n = n;
  out.chain.chain.degrees.assign(s.chain.degrees.begin(), s.chain.degrees.end() - 1);
  out.chain.chain.gluings.assign(s.chain.gluings.begin(), s.chain.gluings.end() - (r >= 2 ? 1 : 0));
  if (r >= 2) {
    out.chain.chain.degrees.back() += d;
    Matrix pl_inv = inverse_or_throw(pl);
    if (r >= 3)
      out.chain.chain.gluings[r - 3] = pl_inv * out.chain.chain.gluings[r - 3];
    out.chain.attach = r >= 3 ? *s.attach : pl_inv * *s.attach;
  }
  return out;
}

struct SideInsertion {
  AttachedChain chain;
  Matrix h;      // renormalization of the old endpoint fiber
  Matrix kappa;  // E_i coordinates of the bf -> new endpoint coordinates
  Matrix psi;
  BfMorphism bf;  // the bf in endpoint coordinates on both sides
};

// f maps E_i -> E_{i-1}; E_{i-1} is the current endpoint fiber of the side.
SideInsertion insert_side(const AttachedChain& s, std::size_t n, const Matrix& f, const Matrix& g, std::size_t d) {
  const std::size_t r = s.chain.length();
  std::size_t a = 0;
  if (r >= 1) {
    if (s.chain.degrees.back() <= d) throw StructuralError("insert: neighbour degree not larger than inserted degree");
    a = s.chain.degrees.back() - d;
  }
  const std::size_t m = a + d;
  Subspace u = kernel(g);
  if (u.dim() != n - d) throw StructuralError("insert: ker g has wrong dimension");

  // Move U = ker g onto the coordinates outside a..a+d-1 by an automorphism of
  // the last component (right fiber h, left fiber hl) or of the base fiber.
  Matrix h = Matrix::identity(n), hl = Matrix::identity(n);
  if (r == 0) {
    h = inverse_or_throw(hcat(complement_basis(u), u.basis()));
  } else {
    Subspace uf = intersect(u, Subspace::coords(n, 0, m));
    if (uf.dim() != a || sum(u, Subspace::coords(n, 0, m)).dim() != n)
      throw StructuralError("insert: ker g in wrong position relative to the F-part");
    Matrix ufm = uf.basis().rows_range(0, m);
    Subspace ufs = Subspace::span(ufm);
    Matrix ainv = inverse_or_throw(hcat(ufs.basis(), complement_basis(ufs)));
    hl.place(0, 0, ainv);
    Matrix moved = hl * u.basis();
    Matrix b(n, n);
    for (std::size_t j = m; j < n; ++j) {
      Matrix e(n - m, 1);
      e(j - m, 0) = 1;
      auto y = solve(moved.rows_range(m, n), e);
      if (!y) throw StructuralError("insert: ker g does not surject onto the trivial part");
      Matrix x = moved * *y;
      for (std::size_t k = a; k < m; ++k) b(k, j) = -x(k, 0);
    }
    h = (Matrix::identity(n) + b) * hl;
  }
  Matrix fh = h * f, gh = g * inverse_or_throw(h);

  Subspace img = image(gh);
  Matrix kappa = inverse_or_throw(hcat(img.basis(), complement_basis(img)));
  Matrix ft = fh * inverse_or_throw(kappa), gt = kappa * gh;

  Matrix psi(n, n);
  std::vector<std::size_t> ucols;
  for (std::size_t k = 0; k < n; ++k)
    if (k < a || k >= m) ucols.push_back(k);
  Matrix sb = Matrix::identity(n).select_cols(ucols);
  auto z = solve(ft, sb);
  if (!z) throw StructuralError("insert: image of f is not the expected coordinate subspace");
  Matrix pz = proj_last(n, n - d) * *z;
  for (std::size_t k = 0; k < ucols.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) psi(i, ucols[k]) = pz(i, k);
  for (std::size_t k = a; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) psi(i, k) = gt(i, k);
  if (!invertible(psi)) throw StructuralError("insert: node gluing not invertible");

  SideInsertion out;
  out.h = h;
  out.kappa = kappa;
  out.psi = psi;
  out.bf = {n, 0, ft, gt, n - d};
  out.chain = s;
  out.chain.chain.n = n;
  if (r == 0) {
    out.chain.attach = psi;
  } else {
    if (r == 1)
      out.chain.attach = hl * *s.attach;
    else
      out.chain.chain.gluings[r - 2] = hl * s.chain.gluings[r - 2];
    out.chain.chain.degrees.back() = a;
    out.chain.chain.gluings.push_back(psi);
  }
  out.chain.chain.degrees.push_back(d);
  return out;
}

void check_side_arg(int side) {
  if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
}

ContractResult contract_unchecked(const GiesekerDatum& d, int side, std::size_t threshold) {
  check_side_arg(side);
  if (threshold < 1 || threshold > d.n) throw std::invalid_argument("contract_step: threshold outside [1, n]");
  std::size_t ext = extremal_degree(d, side);
  if (ext < threshold) throw StructuralError("contract_step: extremal degree below threshold");
  ContractResult res{d, BfMorphism::unit(d.n, d.n - threshold), false};
  if (ext > threshold) return res;
  SideContraction sc = contract_side(d.side(side), d.n);
  res.datum.side(side) = sc.chain;
  res.datum.phi = endpoint_psi_apply_left(side, d.phi, sc.psi);
  res.bf = sc.bf;
  res.fired = true;
  return res;
}

}  // namespace

ContractResult contract_step(const GiesekerDatum& d, int side, std::size_t threshold) {
  ContractResult res = contract_unchecked(d, side, threshold);
  if (res.fired && !admissible_pair(res.datum))
    throw std::logic_error("contract_step: contracted datum is not admissible");
  return res;
}

GiesekerDatum insert_step(const GiesekerDatum& d, int side, const BfMorphism& b, std::size_t stage) {
  check_side_arg(side);
  auto v = validate_bf(b);
  if (!v.empty()) throw std::invalid_argument("insert_step: invalid bf-morphism: " + v[0]);
  if (stage < 1 || stage > d.n || b.bf_rank != stage - 1)
    throw std::invalid_argument("insert_step: stage and bf rank disagree");
  if (sgn(b.mu) != 0) return d;
  SideInsertion si = insert_side(d.side(side), d.n, b.f, b.g, d.n - stage + 1);
  GiesekerDatum out = d;
  out.side(side) = si.chain;
  Matrix hinv = inverse_or_throw(si.h);
  out.phi = side == 1 ? d.phi * hinv * inverse_or_throw(si.psi) : si.psi * si.h * d.phi;
  return out;
}

GeneralizedIsomorphism gvbd_to_gi(const GiesekerDatum& d) {
  d.check();
  if (!admissible_pair(d)) throw std::invalid_argument("gvbd_to_gi: datum is not admissible");
  const std::size_t n = d.n;
  GeneralizedIsomorphism gi;
  gi.n = n;
  gi.phi = d.phi;
  gi.e_stages.resize(n);
  gi.f_stages.resize(n);
  GiesekerDatum cur = d;
  for (int side : {1, 2}) {
    auto& st = side == 1 ? gi.e_stages : gi.f_stages;
    for (std::size_t i = n; i >= 1; --i) {
      ContractResult r = contract_unchecked(cur, side, n - i + 1);
      cur = std::move(r.datum);
      st[i - 1] = std::move(r.bf);
    }
    if (cur.side(side).chain.length() != 0) throw std::logic_error("gvbd_to_gi: side not fully contracted");
  }
  return gi;
}

GiesekerDatum gi_to_gvbd(const GeneralizedIsomorphism& gi) {
  auto v = validate_gi(gi);
  if (!v.empty()) throw std::invalid_argument("gi_to_gvbd: invalid generalized isomorphism: " + v[0]);
  const std::size_t n = gi.n;
  GiesekerDatum out = empty_datum(n);
  Matrix iota[3];
  for (int side : {2, 1}) {
    const auto& st = side == 1 ? gi.e_stages : gi.f_stages;
    // iota: stage coordinates of E_i -> coordinates of the current endpoint fiber.
    Matrix iota_s = Matrix::identity(n);
    for (std::size_t i = 1; i <= n; ++i) {
      const BfMorphism& b = st[i - 1];
      if (sgn(b.mu) != 0) {
        iota_s = (1 / b.mu) * (iota_s * b.f);
        continue;
      }
      SideInsertion si = insert_side(out.side(side), n, iota_s * b.f, b.g * inverse_or_throw(iota_s), n - i + 1);
      out.side(side) = si.chain;
      iota_s = si.kappa;
    }
    iota[side] = iota_s;
  }
  out.phi = iota[2] * gi.phi * inverse_or_throw(iota[1]);
  if (!admissible_pair(out)) throw std::logic_error("gi_to_gvbd: constructed datum is not admissible");
  return out;
}

namespace {

std::vector<std::size_t> zero_stages(const std::vector<bool>& z) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i]) out.push_back(i + 1);
  return out;
}

Fingerprint fingerprint(const GiesekerDatum& d, const GeneralizedIsomorphism& gi) {
  Fingerprint fp;
  fp.deg1 = d.side1.chain.degrees;
  fp.deg2 = d.side2.chain.degrees;
  fp.mu_zeros = zero_stages(mu_zero_pattern(gi));
  fp.lambda_zeros = zero_stages(lambda_zero_pattern(gi));
  fp.dim_q = grassmannian_point(gi).dim_q;
  Composites c = composite_maps(gi);
  fp.rank_comp_e = rank(c.comp_e);
  fp.rank_comp_f = rank(c.comp_f);
  return fp;
}

}  // namespace

RoundtripReport roundtrip_check(const GiesekerDatum& d, std::uint64_t seed) {
  GeneralizedIsomorphism gi = gvbd_to_gi(d);
  GiesekerDatum back = gi_to_gvbd(gi);
  return {datum_equivalent(back, d, seed), fingerprint(d, gi)};
}

RoundtripReport roundtrip_check(const GeneralizedIsomorphism& gi, std::uint64_t seed) {
  GiesekerDatum d = gi_to_gvbd(gi);
  GeneralizedIsomorphism again = gvbd_to_gi(d);
  return {gi_equivalent(again, gi, seed), fingerprint(d, gi)};
}

}  // namespace gk
