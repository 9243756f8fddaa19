// Exercises the shared library through its C header only.
#include <cstdio>
#include <cstring>
#include <string>

#include "gieseker.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::printf("%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static const char* swap_chain =
    R"({"v":1,"n":2,"degrees":[1,1],"gluings":[[["0","1"],["1","0"]]]})";
static const char* identity_chain =
    R"({"v":1,"n":2,"degrees":[1,1],"gluings":[[["1","0"],["0","1"]]]})";

int main() {
  gk_chain* c = nullptr;
  EXPECT(gk_chain_from_json(swap_chain, &c) == GK_OK);
  int v = -1;
  for (int m = 0; m < 3; ++m) {
    EXPECT(gk_chain_is_admissible(c, static_cast<gk_method>(m), &v) == GK_OK);
    EXPECT(v == 1);
  }
  gk_chain_destroy(c);
  EXPECT(gk_chain_from_json(identity_chain, &c) == GK_OK);
  EXPECT(gk_chain_is_admissible(c, GK_METHOD_VANISHING, &v) == GK_OK && v == 0);
  EXPECT(gk_chain_is_admissible(c, static_cast<gk_method>(9), &v) == GK_ERR_ARGUMENT);
  gk_chain_destroy(c);

  EXPECT(gk_chain_from_json("{", &c) == GK_ERR_SCHEMA);
  EXPECT(std::strlen(gk_last_error()) > 0);
  EXPECT(gk_chain_from_json(R"({"v":1,"n":2,"degrees":[3],"gluings":[]})", &c) == GK_ERR_SCHEMA);
  EXPECT(gk_chain_from_json(nullptr, &c) == GK_ERR_ARGUMENT);

  gk_kind k;
  EXPECT(gk_json_kind(swap_chain, &k) == GK_OK && k == GK_KIND_CHAIN);

  gk_datum* d = nullptr;
  EXPECT(gk_datum_random(3, 1, 1, 42, &d) == GK_OK);
  char* text = nullptr;
  EXPECT(gk_datum_to_json(d, &text) == GK_OK);
  gk_datum* d2 = nullptr;
  EXPECT(gk_datum_from_json(text, &d2) == GK_OK);
  char* text2 = nullptr;
  EXPECT(gk_datum_to_json(d2, &text2) == GK_OK);
  EXPECT(std::string(text) == text2);
  gk_string_free(text2);
  gk_datum_destroy(d2);

  char* report = nullptr;
  EXPECT(gk_datum_roundtrip(d, 1, &report) == GK_OK);
  EXPECT(std::string(report).find("\"ok\":true") != std::string::npos);
  gk_string_free(report);

  gk_geniso* g = nullptr;
  EXPECT(gk_datum_to_geniso(d, &g) == GK_OK);
  char* viol = nullptr;
  EXPECT(gk_geniso_validate(g, &viol) == GK_OK);
  EXPECT(std::string(viol) == "[]");
  gk_string_free(viol);
  char* grass = nullptr;
  EXPECT(gk_geniso_grassmannian(g, &grass) == GK_OK);
  EXPECT(std::string(grass).find("\"dimQ\":3") != std::string::npos);
  gk_string_free(grass);
  EXPECT(gk_geniso_roundtrip(g, 1, &report) == GK_OK);
  gk_string_free(report);
  gk_datum* back = nullptr;
  EXPECT(gk_geniso_to_datum(g, &back) == GK_OK);
  gk_datum_destroy(back);
  gk_geniso_destroy(g);
  gk_string_free(text);
  gk_datum_destroy(d);

  EXPECT(gk_datum_random(2, 2, 1, 0, &d) == GK_ERR_PRECONDITION);

  // Invalid rank-one gi: both scalars zero.
  const char* bad_gi =
      R"({"v":1,"n":1,"mu":["0"],"lambda":["0"],"e_f":[[["0"]]],"e_g":[[["1"]]],"f_f":[[["0"]]],"f_g":[[["1"]]],"phi":[["1"]]})";
  EXPECT(gk_geniso_from_json(bad_gi, &g) == GK_OK);
  EXPECT(gk_geniso_validate(g, &viol) == GK_ERR_PROPERTY);
  gk_string_free(viol);
  EXPECT(gk_geniso_grassmannian(g, &grass) == GK_ERR_PRECONDITION);
  gk_geniso_destroy(g);

  char* summary = nullptr;
  gk_status s = gk_selftest(4, 2, 1, 0, &summary);
  EXPECT(summary != nullptr);
  EXPECT(s == GK_OK || s == GK_ERR_PROPERTY);
  gk_string_free(summary);
  EXPECT(gk_selftest(4, 9, 1, 0, &summary) == GK_ERR_PRECONDITION);

  std::printf("%s (%d failures)\n", failures ? "FAIL" : "ok", failures);
  return failures ? 1 : 0;
}
