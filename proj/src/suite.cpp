#include "suite.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <functional>
#include <thread>

namespace gk {

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 over a mix of the three inputs
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1) + 0xbf58476d1ce4e5b9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Tally {
  std::size_t instances = 0, failures = 0, retries = 0, aux1 = 0, aux2 = 0, aux3 = 0;
  std::string detail;
  json example;

  void fail(const std::string& why, const json& ex) {
    ++failures;
    if (detail.empty()) {
      detail = why;
      example = ex;
    }
  }
  void merge(const Tally& t) {
    instances += t.instances;
    failures += t.failures;
    retries += t.retries;
    aux1 += t.aux1;
    aux2 += t.aux2;
    aux3 += t.aux3;
    if (detail.empty() && !t.detail.empty()) {
      detail = t.detail;
      example = t.example;
    }
  }
};

// Runs fn over trial indices and merges the per-trial tallies in index order.
template <std::size_t K>
std::array<Tally, K> run_trials(std::size_t count, bool parallel,
                                const std::function<std::array<Tally, K>(std::size_t)>& fn) {
  std::vector<std::array<Tally, K>> per(count);
  auto guarded = [&](std::size_t i) {
    try {
      per[i] = fn(i);
    } catch (const std::exception& e) {
      per[i][0].fail(std::string("exception: ") + e.what(), nullptr);
    }
  };
  std::size_t workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) guarded(i);
      });
    for (auto& t : pool) t.join();
  }
  std::array<Tally, K> total;
  for (const auto& p : per)
    for (std::size_t k = 0; k < K; ++k) total[k].merge(p[k]);
  return total;
}

Matrix permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(p[i], i) = 1;
  return m;
}

// Chains mixing admissible and non-admissible instances.
ChainBundle mixed_chain(std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t n = 1 + rng() % max_n;
  std::size_t r = 1 + rng() % n;
  switch (rng() % 3) {
    case 0:
      return random_chain(n, r, rng(), false);
    default: {
      std::vector<std::size_t> deg(r, 1);
      std::size_t spare = rng() % (n - r + 1);
      for (std::size_t k = 0; k < spare; ++k) ++deg[rng() % r];
      ChainBundle cb = random_chain(n, deg, rng);
      if (rng() % 2)
        for (auto& g : cb.gluings) g = permutation(n, rng);
      return cb;
    }
  }
}

// Datum with n <= max_n; every third trial has both sides nonempty when n >= 2.
GiesekerDatum trial_datum(std::size_t max_n, std::size_t index, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool both = index % 3 == 0 && max_n >= 2;
  std::size_t n = both ? 2 + rng() % (max_n - 1) : 1 + rng() % max_n;
  std::size_t len1, len2;
  if (both) {
    len1 = 1 + rng() % (n - 1);
    len2 = 1 + rng() % (n - len1);
  } else {
    len1 = rng() % (n + 1);
    len2 = rng() % (n - len1 + 1);
  }
  return random_datum(n, len1, len2, rng());
}

bool normal_form_ok(const BfMorphism& b) {
  NormalForm nf = normal_form_bf(b);
  const std::size_t n = b.n;
  Matrix df = Matrix::identity(n), dg = Matrix::identity(n);
  for (std::size_t k = 0; k < nf.d; ++k) df(k, k) = b.mu;
  for (std::size_t k = nf.d; k < n; ++k) dg(k, k) = b.mu;
  return nf.q * b.f * inverse_or_throw(nf.p) == df && nf.p * b.g * inverse_or_throw(nf.q) == dg;
}

json bf_json(const BfMorphism& b) {
  return {{"mu", to_string(b.mu)}, {"f", to_json(b.f)}, {"g", to_json(b.g)}, {"bf_rank", b.bf_rank}};
}

CriterionResult finish(int id, const char* name, const Tally& t, bool pass, std::string extra = {}) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.pass = pass;
  r.instances = t.instances;
  r.failures = t.failures;
  r.retries = t.retries;
  r.detail = t.detail.empty() ? extra : t.detail + (extra.empty() ? "" : "; " + extra);
  r.counterexample = t.example;
  return r;
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.max_n < 1 || cfg.max_n > 8) throw std::invalid_argument("max_n must lie in [1, 8]");
  std::vector<CriterionResult> out;
  const std::size_t data_trials = std::max<std::size_t>(1, cfg.trials / 2);

  // 1-3: chains.
  auto chains = run_trials<3>(cfg.trials, cfg.parallel, [&](std::size_t i) {
    std::array<Tally, 3> t;
    ChainBundle cb = mixed_chain(cfg.max_n, child_seed(cfg.seed, 1, i));
    json ex = to_json(cb);
    ++t[0].instances;
    bool def = is_admissible(cb, AdmissibilityMethod::definition);
    bool dim = is_admissible(cb, AdmissibilityMethod::dimension);
    bool van = is_admissible(cb, AdmissibilityMethod::vanishing);
    std::size_t h0 = section_space(cb, true, false).dim(), deg = total_degree(cb);
    if (def != dim || dim != van) t[0].fail("admissibility methods disagree", ex);
    if (van) {
      ++t[0].aux1;
      if (h0 != deg) t[0].fail("admissible but dim H0(E(-x0)) != sum of degrees", ex);
      if (section_space(cb, false, false).dim() != cb.n + deg) t[0].fail("admissible but dim H0(E) != n + sum", ex);
      ++t[1].instances;
      if (!v_image_check(cb)) t[1].fail("V_i differs from the section image", ex);
      ++t[2].instances;
      if (cb.length() > cb.n) t[2].fail("admissible chain longer than rank", ex);
      for (std::size_t a = 1; a <= cb.length(); ++a)
        for (std::size_t b = a; b <= cb.length(); ++b)
          if (!is_admissible(subchain(cb, a, b))) t[2].fail("inadmissible subchain", ex);
      if (!is_admissible(reverse(cb))) t[2].fail("reverse not admissible", ex);
      if (!(reverse(reverse(cb)) == cb)) t[2].fail("reverse is not an involution", ex);
    } else {
      ++t[0].aux2;
      std::size_t r = cb.length(), n = cb.n;
      Matrix at_end = section_space(cb, true, false).basis().rows_range(2 * n * (r - 1) + n, 2 * n * r);
      if (rank(at_end) >= deg) t[0].fail("inadmissible but image of H0(E(-x0)) at x_r not below sum of degrees", ex);
      if (h0 >= deg) {
        ++t[0].aux3;
        t[0].fail("inadmissible but dim H0(E(-x0)) not below sum of degrees", ex);
      }
    }
    return t;
  });
  {
    const Tally& t = chains[0];
    out.push_back(finish(1, "three-way admissibility agreement and H0 dimension", t,
                         t.failures == 0 && t.aux1 > 0 && t.aux2 > 0,
                         std::to_string(t.aux1) + " admissible, " + std::to_string(t.aux2) + " inadmissible, " +
                             std::to_string(t.aux3) + " inadmissible with dim H0(E(-x0)) = sum of degrees"));
  }
  out.push_back(finish(2, "V_i equals the image of sections vanishing at x_0", chains[1], chains[1].failures == 0));
  out.push_back(finish(3, "subchains and reversal stay admissible", chains[2], chains[2].failures == 0));

  // 4-5: contraction bookkeeping and bf-morphisms.
  auto contr = run_trials<2>(data_trials, cfg.parallel, [&](std::size_t i) {
    std::array<Tally, 2> t;
    GiesekerDatum d = trial_datum(cfg.max_n, i, child_seed(cfg.seed, 4, i));
    ++t[0].instances;
    ++t[1].instances;
    const std::size_t n = d.n;
    GiesekerDatum cur = d;
    for (int side : {1, 2})
      for (std::size_t st = n; st >= 1; --st) {
        const std::size_t th = n - st + 1;
        json ex = {{"datum", to_json(cur)}, {"side", side}, {"threshold", th}};
        ContractResult res = contract_step(cur, side, th);
        const auto& before = cur.side(side).chain.degrees;
        const auto& after = res.datum.side(side).chain.degrees;
        if (!res.fired) {
          if (!(res.datum == cur) || !(res.bf == BfMorphism::unit(n, n - th)))
            t[0].fail("non-firing step changed the datum", ex);
          continue;
        }
        ++t[0].aux1;
        if (after.size() + 1 != before.size()) t[0].fail("length did not drop by one", ex);
        if (before.size() >= 2 &&
            (after.back() != before[before.size() - 2] + before.back() ||
             !std::equal(after.begin(), after.end() - 1, before.begin())))
          t[0].fail("degree formula violated", ex);
        if (extremal_degree(res.datum, side) <= th) t[0].fail("extremal degree not above threshold", ex);
        if (!(res.datum.side(3 - side) == cur.side(3 - side))) t[0].fail("other side changed", ex);
        if (!admissible_pair(res.datum)) t[0].fail("contraction not admissible", ex);

        ++t[1].aux1;
        if (!validate_bf(res.bf).empty() || res.bf.bf_rank != n - th) t[1].fail("extracted bf invalid", ex);
        if (!normal_form_ok(res.bf)) t[1].fail("normal form failed on extracted bf", ex);
        GiesekerDatum ins = insert_step(res.datum, side, res.bf, st);
        if (!datum_equivalent(ins, cur, child_seed(cfg.seed, 5, i))) t[1].fail("insert after contract not equivalent", ex);
        ContractResult again = contract_step(ins, side, th);
        if (!(again.datum == res.datum) || !(again.bf == res.bf)) t[1].fail("contract after insert not identity", ex);
        cur = std::move(res.datum);
      }
    std::mt19937_64 rng(child_seed(cfg.seed, 6, i));
    std::size_t bn = 1 + rng() % cfg.max_n;
    BfMorphism rb = random_bf(bn, rng() % (bn + 1), rng() % 2, rng);
    ++t[1].aux2;
    if (!validate_bf(rb).empty() || !normal_form_ok(rb)) t[1].fail("normal form failed on random bf", bf_json(rb));
    return t;
  });
  out.push_back(finish(4, "contraction degree bookkeeping and admissibility", contr[0], contr[0].failures == 0,
                       std::to_string(contr[0].aux1) + " firing steps"));
  out.push_back(finish(5, "bf validity, normal form, insert/contract inverses", contr[1], contr[1].failures == 0,
                       std::to_string(contr[1].aux1) + " extracted, " + std::to_string(contr[1].aux2) + " random bfs"));

  // 6-8: round trips, validity of the generalized isomorphism, Grassmannian.
  const std::size_t rt_n = std::min<std::size_t>(4, cfg.max_n);
  auto rt = run_trials<3>(data_trials, cfg.parallel, [&](std::size_t i) {
    std::array<Tally, 3> t;
    GiesekerDatum d = trial_datum(rt_n, i, child_seed(cfg.seed, 7, i));
    const std::size_t n = d.n;
    json ex = to_json(d);
    for (auto& x : t) ++x.instances;
    if (d.side1.chain.length() && d.side2.chain.length()) ++t[0].aux1;

    auto with_retry = [&](auto&& check) {
      if (check(child_seed(cfg.seed, 8, i))) return true;
      ++t[0].retries;
      return static_cast<bool>(check(child_seed(cfg.seed, 9, i)));
    };
    GeneralizedIsomorphism gi = gvbd_to_gi(d);
    if (!with_retry([&](std::uint64_t s) { return roundtrip_check(d, s).ok; }))
      t[0].fail("datum round trip failed", ex);
    if (!with_retry([&](std::uint64_t s) { return roundtrip_check(gi, s).ok; }))
      t[0].fail("gi round trip failed", to_json(gi));

    if (!validate_gi(gi).empty()) t[1].fail("gvbd_to_gi output invalid: " + validate_gi(gi)[0], ex);
    auto mz = mu_zero_pattern(gi), lz = lambda_zero_pattern(gi);
    if (static_cast<std::size_t>(std::count(mz.begin(), mz.end(), true)) != d.side1.chain.length() ||
        static_cast<std::size_t>(std::count(lz.begin(), lz.end(), true)) != d.side2.chain.length())
      t[1].fail("zero counts differ from chain lengths", ex);

    GrassmannianPoint gp = grassmannian_point(gi);
    if (gp.dim_q != n) t[2].fail("dim Q != n", ex);
    std::mt19937_64 rng(child_seed(cfg.seed, 10, i));
    GiesekerDatum moved = random_automorphic_image(d, rng, false);
    if (!(grassmannian_point(gvbd_to_gi(moved)).q == gp.q)) t[2].fail("Q changed under equivalence", ex);
    std::vector<Matrix> c, e;
    for (std::size_t k = 0; k < n; ++k) {
      c.push_back(random_invertible(n, -2, 2, rng));
      e.push_back(random_invertible(n, -2, 2, rng));
    }
    GeneralizedIsomorphism conj = conjugate(gi, c, e);
    ++t[2].aux1;
    if (!validate_gi(conj).empty() || grassmannian_point(conj).dim_q != n || !(grassmannian_point(conj).q == gp.q))
      t[2].fail("conjugated gi changed Q", to_json(conj));
    return t;
  });
  {
    const double residual = rt[0].instances ? double(rt[0].failures) / double(2 * rt[0].instances) : 0.0;
    out.push_back(finish(6, "round trips in both directions", rt[0], residual <= 0.01,
                         std::to_string(rt[0].aux1) + " with both sides nonempty, " + std::to_string(rt[0].retries) +
                             " retries"));
  }
  out.push_back(finish(7, "gvbd_to_gi output validity and zero counts", rt[1], rt[1].failures == 0));
  {
    Tally t = rt[2];
    for (std::size_t n = 1; n <= cfg.max_n; ++n) {
      ++t.instances;
      GeneralizedIsomorphism gi = gvbd_to_gi(empty_datum(n));
      Matrix expect = hcat(Matrix::identity(n), Rational(-1) * Matrix::identity(n));
      GrassmannianPoint gp = grassmannian_point(gi);
      if (gp.dim_q != n || !(gp.q == expect)) t.fail("all-units quotient is not the graph of -1", to_json(gi));
    }
    out.push_back(finish(8, "Grassmannian quotient has rank n and is invariant", t, t.failures == 0));
  }

  // 9: degree additivity on chains.
  auto lines = run_trials<1>(std::max<std::size_t>(50, cfg.trials / 4), cfg.parallel, [&](std::size_t i) {
    std::array<Tally, 1> t;
    std::mt19937_64 rng(child_seed(cfg.seed, 11, i));
    std::size_t r = 1 + rng() % 6;
    std::vector<long> l1(r), l2(r);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (std::size_t k = 0; k < r; ++k) {
      l1[k] = dist(rng);
      l2[k] = dist(rng);
    }
    ++t[0].instances;
    long direct = 0;
    for (std::size_t k = 0; k < r; ++k) direct += l1[k] + l2[k];
    if (line_tensor_degree(l1, l2) != line_degree(l1) + line_degree(l2) || line_tensor_degree(l1, l2) != direct)
      t[0].fail("degree not additive", json{{"l1", l1}, {"l2", l2}});
    return t;
  });
  out.push_back(finish(9, "line-bundle degree additivity", lines[0], lines[0].failures == 0));

  // 10: rank one, exhaustive.
  {
    Tally t;
    std::size_t valid = 0;
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (int mu : {0, 1})
      for (int la : {0, 1}) {
        ++t.instances;
        GeneralizedIsomorphism gi;
        gi.n = 1;
        Matrix one = Matrix::identity(1), zero(1, 1);
        gi.e_stages = {{1, mu, mu ? one : zero, one, 0}};
        gi.f_stages = {{1, la, la ? one : zero, one, 0}};
        gi.phi = one;
        bool ok = validate_gi(gi).empty();
        if (ok != (mu || la)) t.fail("validity differs from (mu, lambda) != (0, 0)", to_json(gi));
        if (!ok) continue;
        ++valid;
        GiesekerDatum d = gi_to_gvbd(gi);
        shapes.push_back({d.side1.chain.length(), d.side2.chain.length()});
        if (d.side1.chain.length() != std::size_t(1 - mu) || d.side2.chain.length() != std::size_t(1 - la))
          t.fail("gi_to_gvbd shape mismatch", to_json(gi));
      }
    std::sort(shapes.begin(), shapes.end());
    bool three = valid == 3 && std::unique(shapes.begin(), shapes.end()) == shapes.end();
    out.push_back(finish(10, "rank one: three valid patterns, three shapes", t, t.failures == 0 && three));
  }
  return out;
}

json to_json(const CriterionResult& r) {
  json j = {{"id", r.id},
            {"name", r.name},
            {"pass", r.pass},
            {"instances", r.instances},
            {"failures", r.failures},
            {"retries", r.retries},
            {"detail", r.detail}};
  if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
  return j;
}

}  // namespace gk
