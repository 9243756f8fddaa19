#include "gieseker.h"

#include <cstring>

#include "correspondence.hpp"
#include "suite.hpp"

struct gk_chain {
  gk::ChainBundle v;
};
struct gk_datum {
  gk::GiesekerDatum v;
};
struct gk_geniso {
  gk::GeneralizedIsomorphism v;
};

namespace {

thread_local std::string last_error;

gk_status set_error(gk_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Maps exceptions to status codes. Precondition failures are std::invalid_argument;
// StructuralError and logic_error mean a checked claim failed on a valid input.
template <class F>
gk_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const gk::SchemaError& e) {
    return set_error(GK_ERR_SCHEMA, e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(GK_ERR_SCHEMA, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(GK_ERR_PRECONDITION, e.what());
  } catch (const gk::BudgetExhausted& e) {
    return set_error(GK_ERR_BUDGET, e.what());
  } catch (const gk::StructuralError& e) {
    return set_error(GK_ERR_PROPERTY, e.what());
  } catch (const std::logic_error& e) {
    return set_error(GK_ERR_PROPERTY, e.what());
  } catch (const std::exception& e) {
    return set_error(GK_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(GK_ERR_INTERNAL, "unknown error");
  }
}

gk::json parse(const char* text) { return gk::json::parse(text); }

}  // namespace

#define GK_REQUIRE(p) \
  if (!(p)) return set_error(GK_ERR_ARGUMENT, "null argument: " #p)

extern "C" {

const char* gk_last_error(void) { return last_error.c_str(); }

void gk_string_free(char* s) { std::free(s); }

gk_status gk_json_kind(const char* json, gk_kind* out) {
  GK_REQUIRE(json && out);
  return guard([&] {
    switch (gk::classify(parse(json))) {
      case gk::ObjectKind::chain: *out = GK_KIND_CHAIN; break;
      case gk::ObjectKind::datum: *out = GK_KIND_DATUM; break;
      case gk::ObjectKind::gi: *out = GK_KIND_GENISO; break;
      default: *out = GK_KIND_UNKNOWN;
    }
    return GK_OK;
  });
}

gk_status gk_chain_from_json(const char* json, gk_chain** out) {
  GK_REQUIRE(json && out);
  return guard([&] {
    *out = new gk_chain{gk::chain_from_json(parse(json))};
    return GK_OK;
  });
}

gk_status gk_chain_to_json(const gk_chain* c, char** out) {
  GK_REQUIRE(c && out);
  return guard([&] {
    *out = dup(gk::to_json(c->v).dump());
    return GK_OK;
  });
}

void gk_chain_destroy(gk_chain* c) { delete c; }

gk_status gk_chain_is_admissible(const gk_chain* c, gk_method method, int* out) {
  GK_REQUIRE(c && out);
  gk::AdmissibilityMethod m;
  switch (method) {
    case GK_METHOD_DEFINITION: m = gk::AdmissibilityMethod::definition; break;
    case GK_METHOD_DIMENSION: m = gk::AdmissibilityMethod::dimension; break;
    case GK_METHOD_VANISHING: m = gk::AdmissibilityMethod::vanishing; break;
    default: return set_error(GK_ERR_ARGUMENT, "unknown admissibility method");
  }
  return guard([&] {
    *out = gk::is_admissible(c->v, m) ? 1 : 0;
    return GK_OK;
  });
}

gk_status gk_datum_from_json(const char* json, gk_datum** out) {
  GK_REQUIRE(json && out);
  return guard([&] {
    *out = new gk_datum{gk::datum_from_json(parse(json))};
    return GK_OK;
  });
}

gk_status gk_datum_to_json(const gk_datum* d, char** out) {
  GK_REQUIRE(d && out);
  return guard([&] {
    *out = dup(gk::to_json(d->v).dump());
    return GK_OK;
  });
}

void gk_datum_destroy(gk_datum* d) { delete d; }

gk_status gk_datum_random(uint32_t n, uint32_t len1, uint32_t len2, uint64_t seed, gk_datum** out) {
  GK_REQUIRE(out);
  return guard([&] {
    *out = new gk_datum{gk::random_datum(n, len1, len2, seed)};
    return GK_OK;
  });
}

gk_status gk_datum_to_geniso(const gk_datum* d, gk_geniso** out) {
  GK_REQUIRE(d && out);
  return guard([&] {
    *out = new gk_geniso{gk::gvbd_to_gi(d->v)};
    return GK_OK;
  });
}

gk_status gk_datum_roundtrip(const gk_datum* d, uint64_t seed, char** out) {
  GK_REQUIRE(d && out);
  return guard([&] {
    gk::RoundtripReport r = gk::roundtrip_check(d->v, seed);
    *out = dup(gk::to_json(r).dump());
    if (!r.ok) return set_error(GK_ERR_PROPERTY, "datum round trip failed");
    return GK_OK;
  });
}

gk_status gk_geniso_from_json(const char* json, gk_geniso** out) {
  GK_REQUIRE(json && out);
  return guard([&] {
    *out = new gk_geniso{gk::gi_from_json(parse(json))};
    return GK_OK;
  });
}

gk_status gk_geniso_to_json(const gk_geniso* g, char** out) {
  GK_REQUIRE(g && out);
  return guard([&] {
    *out = dup(gk::to_json(g->v).dump());
    return GK_OK;
  });
}

void gk_geniso_destroy(gk_geniso* g) { delete g; }

gk_status gk_geniso_validate(const gk_geniso* g, char** out) {
  GK_REQUIRE(g && out);
  return guard([&] {
    auto v = gk::validate_gi(g->v);
    *out = dup(gk::json(v).dump());
    if (!v.empty()) return set_error(GK_ERR_PROPERTY, v.front());
    return GK_OK;
  });
}

gk_status gk_geniso_to_datum(const gk_geniso* g, gk_datum** out) {
  GK_REQUIRE(g && out);
  return guard([&] {
    *out = new gk_datum{gk::gi_to_gvbd(g->v)};
    return GK_OK;
  });
}

gk_status gk_geniso_roundtrip(const gk_geniso* g, uint64_t seed, char** out) {
  GK_REQUIRE(g && out);
  return guard([&] {
    gk::RoundtripReport r = gk::roundtrip_check(g->v, seed);
    *out = dup(gk::to_json(r).dump());
    if (!r.ok) return set_error(GK_ERR_PROPERTY, "generalized isomorphism round trip failed");
    return GK_OK;
  });
}

gk_status gk_geniso_grassmannian(const gk_geniso* g, char** out) {
  GK_REQUIRE(g && out);
  return guard([&] {
    *out = dup(gk::to_json(gk::grassmannian_point(g->v)).dump());
    return GK_OK;
  });
}

gk_status gk_selftest(uint32_t trials, uint32_t max_n, uint64_t seed, int parallel, char** out) {
  GK_REQUIRE(out);
  return guard([&] {
    gk::SuiteConfig cfg{trials, max_n, seed, parallel != 0};
    auto results = gk::run_suite(cfg);
    gk::json list = gk::json::array();
    bool all = true;
    for (const auto& r : results) {
      list.push_back(gk::to_json(r));
      all = all && r.pass;
    }
    gk::json summary = {{"pass", all},
                        {"trials", trials},
                        {"max_n", max_n},
                        {"seed", seed},
                        {"parallel", parallel != 0},
                        {"criteria", list}};
    *out = dup(summary.dump());
    if (!all) return set_error(GK_ERR_PROPERTY, "property suite reported failures");
    return GK_OK;
  });
}

}  // extern "C"
