// Command-line front end over the C API.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "gieseker.h"

namespace {

struct Exit {
  int code;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw Exit{1};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Property violations exit 2, everything else that fails exits 1.
void check(gk_status s) {
  if (s == GK_OK) return;
  std::cerr << "error: " << gk_last_error() << "\n";
  throw Exit{s == GK_ERR_PROPERTY ? 2 : 1};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  gk_string_free(s);
  return out;
}

// Prints the JSON output first so counterexamples reach stdout even on failure.
void print_then_check(gk_status s, char* out) {
  if (out) std::cout << take(out) << "\n";
  check(s);
}

using Chain = std::unique_ptr<gk_chain, decltype(&gk_chain_destroy)>;
using Datum = std::unique_ptr<gk_datum, decltype(&gk_datum_destroy)>;
using Geniso = std::unique_ptr<gk_geniso, decltype(&gk_geniso_destroy)>;

gk_kind kind_of(const std::string& text) {
  gk_kind k;
  check(gk_json_kind(text.c_str(), &k));
  return k;
}

Datum load_datum(const std::string& text) {
  gk_datum* d = nullptr;
  check(gk_datum_from_json(text.c_str(), &d));
  return {d, gk_datum_destroy};
}

Geniso load_geniso(const std::string& text) {
  gk_geniso* g = nullptr;
  check(gk_geniso_from_json(text.c_str(), &g));
  return {g, gk_geniso_destroy};
}

Geniso to_geniso(const gk_datum* d) {
  gk_geniso* g = nullptr;
  check(gk_datum_to_geniso(d, &g));
  return {g, gk_geniso_destroy};
}

[[noreturn]] void wrong_kind(const char* expected) {
  std::cerr << "error: input is not a " << expected << "\n";
  throw Exit{1};
}

int cmd_check_admissible(const std::string& text) {
  if (kind_of(text) != GK_KIND_CHAIN) wrong_kind("chain bundle");
  gk_chain* raw = nullptr;
  check(gk_chain_from_json(text.c_str(), &raw));
  Chain c(raw, gk_chain_destroy);
  int v[3];
  check(gk_chain_is_admissible(c.get(), GK_METHOD_DEFINITION, &v[0]));
  check(gk_chain_is_admissible(c.get(), GK_METHOD_DIMENSION, &v[1]));
  check(gk_chain_is_admissible(c.get(), GK_METHOD_VANISHING, &v[2]));
  auto b = [](int x) { return x ? "true" : "false"; };
  bool agree = v[0] == v[1] && v[1] == v[2];
  std::cout << "{\"definition\":" << b(v[0]) << ",\"dimension\":" << b(v[1]) << ",\"vanishing\":" << b(v[2])
            << ",\"agree\":" << b(agree) << "}\n";
  if (!agree) {
    char* out = nullptr;
    check(gk_chain_to_json(c.get(), &out));
    std::cout << take(out) << "\n";
    std::cerr << "error: admissibility methods disagree\n";
    return 2;
  }
  return 0;
}

int cmd_to_gi(const std::string& text) {
  if (kind_of(text) != GK_KIND_DATUM) wrong_kind("Gieseker datum");
  Datum d = load_datum(text);
  Geniso g = to_geniso(d.get());
  char* out = nullptr;
  check(gk_geniso_to_json(g.get(), &out));
  std::cout << take(out) << "\n";
  return 0;
}

int cmd_to_gvbd(const std::string& text) {
  if (kind_of(text) != GK_KIND_GENISO) wrong_kind("generalized isomorphism");
  Geniso g = load_geniso(text);
  gk_datum* raw = nullptr;
  check(gk_geniso_to_datum(g.get(), &raw));
  Datum d(raw, gk_datum_destroy);
  char* out = nullptr;
  check(gk_datum_to_json(d.get(), &out));
  std::cout << take(out) << "\n";
  return 0;
}

int cmd_roundtrip(const std::string& text, std::uint64_t seed) {
  char* out = nullptr;
  switch (kind_of(text)) {
    case GK_KIND_DATUM: {
      Datum d = load_datum(text);
      gk_status s = gk_datum_roundtrip(d.get(), seed, &out);
      print_then_check(s, out);
      break;
    }
    case GK_KIND_GENISO: {
      Geniso g = load_geniso(text);
      gk_status s = gk_geniso_roundtrip(g.get(), seed, &out);
      if (s == GK_ERR_PROPERTY) std::cout << text << "\n";
      print_then_check(s, out);
      break;
    }
    default:
      wrong_kind("Gieseker datum or generalized isomorphism");
  }
  return 0;
}

int cmd_grass(const std::string& text) {
  Geniso g(nullptr, gk_geniso_destroy);
  switch (kind_of(text)) {
    case GK_KIND_DATUM: g = to_geniso(load_datum(text).get()); break;
    case GK_KIND_GENISO: g = load_geniso(text); break;
    default: wrong_kind("Gieseker datum or generalized isomorphism");
  }
  char* out = nullptr;
  check(gk_geniso_grassmannian(g.get(), &out));
  std::cout << take(out) << "\n";
  return 0;
}

int cmd_random(std::uint32_t n, std::uint32_t len1, std::uint32_t len2, std::uint64_t seed) {
  gk_datum* raw = nullptr;
  check(gk_datum_random(n, len1, len2, seed, &raw));
  Datum d(raw, gk_datum_destroy);
  char* out = nullptr;
  check(gk_datum_to_json(d.get(), &out));
  std::cout << take(out) << "\n";
  return 0;
}

int cmd_selftest(std::uint32_t trials, std::uint32_t max_n, std::uint64_t seed, bool parallel) {
  char* out = nullptr;
  gk_status s = gk_selftest(trials, max_n, seed, parallel ? 1 : 0, &out);
  print_then_check(s, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gieseker data and generalized isomorphisms over Q"};
  app.require_subcommand(1);

  std::string input = "-";
  std::uint64_t seed = 0;

  auto* ca = app.add_subcommand("check-admissible", "admissibility verdicts of a chain bundle");
  ca->add_option("input", input, "JSON file or - for stdin");
  auto* tg = app.add_subcommand("to-gi", "Gieseker datum to generalized isomorphism");
  tg->add_option("input", input, "JSON file or - for stdin");
  auto* tv = app.add_subcommand("to-gvbd", "generalized isomorphism to Gieseker datum");
  tv->add_option("input", input, "JSON file or - for stdin");
  auto* rt = app.add_subcommand("roundtrip", "round trip a datum or generalized isomorphism");
  rt->add_option("input", input, "JSON file or - for stdin");
  rt->add_option("--seed", seed, "seed for the equivalence search");
  auto* gr = app.add_subcommand("grass", "Grassmannian quotient of a generalized isomorphism");
  gr->add_option("input", input, "JSON file or - for stdin");

  std::uint32_t n = 1, len1 = 0, len2 = 0;
  auto* rd = app.add_subcommand("random", "random admissible Gieseker datum");
  rd->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 8));
  rd->add_option("--len1", len1, "length of the chain at p_1");
  rd->add_option("--len2", len2, "length of the chain at p_2");
  rd->add_option("--seed", seed, "seed");

  std::uint32_t trials = 200, max_n = 5;
  std::uint64_t st_seed = 7;
  bool parallel = false;
  auto* sf = app.add_subcommand("selftest", "run the property suite");
  sf->add_option("--trials", trials, "trials per property")->check(CLI::PositiveNumber);
  sf->add_option("--max-n", max_n, "largest rank")->check(CLI::Range(1, 8));
  sf->add_option("--seed", st_seed, "base seed");
  sf->add_flag("--parallel", parallel, "spread trials over threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*ca) return cmd_check_admissible(read_input(input));
    if (*tg) return cmd_to_gi(read_input(input));
    if (*tv) return cmd_to_gvbd(read_input(input));
    if (*rt) return cmd_roundtrip(read_input(input), seed);
    if (*gr) return cmd_grass(read_input(input));
    if (*rd) return cmd_random(n, len1, len2, seed);
    if (*sf) return cmd_selftest(trials, max_n, st_seed, parallel);
  } catch (const Exit& e) {
    return e.code;
  }
  return 1;
}
