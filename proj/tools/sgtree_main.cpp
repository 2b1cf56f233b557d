// Command-line front end; talks to the core exclusively through the C API.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgtree.h"

namespace {

// Exit codes: 0 ok, 1 usage, 2 capacity overflow, 3 property violation.
int exit_code(sgt_status status) {
  switch (status) {
    case SGT_OK: return 0;
    case SGT_OVERFLOW: return 2;
    case SGT_VERIFY_FAILED: return 3;
    default: return 1;
  }
}

struct CliError {
  sgt_status status;
  std::string message;
};

[[noreturn]] void fail(sgt_status status, const std::string& message) {
  throw CliError{status, message};
}

void check(sgt_status status, const std::string& what) {
  if (status != SGT_OK) fail(status, what + ": " + sgt_status_name(status));
}

// Wraps the (buf, size, needed) convention.
std::string fetch_text(const std::function<sgt_status(char*, size_t, size_t*)>& fn,
                       const std::string& what) {
  size_t needed = 0;
  sgt_status status = fn(nullptr, 0, &needed);
  if (status != SGT_BUFFER_TOO_SMALL && status != SGT_OK)
    fail(status, what + ": " + sgt_status_name(status));
  std::string text(needed, '\0');
  status = fn(text.data(), text.size(), &needed);
  if (status != SGT_OK) fail(status, what + ": " + sgt_status_name(status));
  text.resize(needed - 1);  // drop the terminating NUL
  return text;
}

std::vector<uint64_t> parse_uint_list(const std::string& text) {
  std::vector<uint64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t pos = 0;
      const unsigned long long v = std::stoull(item, &pos);
      if (pos != item.size() || v == 0) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      fail(SGT_INVALID_ARGUMENT, "not a positive integer: '" + item + "'");
    }
  }
  if (values.empty()) fail(SGT_INVALID_ARGUMENT, "empty integer list");
  return values;
}

struct SemigroupHandle {
  sgt_semigroup* ptr = nullptr;
  ~SemigroupHandle() { sgt_semigroup_free(ptr); }
};

struct ReportHandle {
  sgt_report* ptr = nullptr;
  ~ReportHandle() { sgt_report_free(ptr); }
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(SGT_INVALID_ARGUMENT, "cannot open output file " + out_path);
  out << text;
}

// ---------------------------------------------------------------- explore

struct ExploreArgs {
  uint32_t genus = 0;
  uint32_t workers = 0;
  uint32_t capacity = 128;
  bool eliahou = false;
  bool progress = false;
  std::string format = "human";
  std::string out_path;
};

void progress_line(uint64_t done, uint64_t total, void*) {
  static uint64_t last = 0;
  if (total == 0) return;
  if (done == total || done - last >= (total + 19) / 20) {
    last = done;
    std::fprintf(stderr, "explored %" PRIu64 "/%" PRIu64 " subtrees\n", done, total);
  }
}

int cmd_explore(const ExploreArgs& args) {
  sgt_explore_options opt{};
  opt.max_genus = args.genus;
  opt.workers = args.workers;
  opt.capacity_bits = args.capacity;
  opt.eliahou = args.eliahou ? 1 : 0;
  if (args.progress) opt.progress = progress_line;

  ReportHandle report;
  const sgt_status status = sgt_explore(&opt, &report.ptr);
  if (status == SGT_OVERFLOW) {
    std::fprintf(stderr, "capacity exhausted at genus %" PRId64 " (capacity %u bits)\n",
                 sgt_report_overflow_genus(report.ptr), args.capacity);
    return 2;
  }
  check(status, "explore");

  std::string text;
  if (args.format == "tsv") {
    text = fetch_text(
        [&](char* b, size_t s, size_t* n) { return sgt_report_tsv(report.ptr, b, s, n); },
        "tsv output");
  } else if (args.format == "json") {
    text = fetch_text(
        [&](char* b, size_t s, size_t* n) { return sgt_report_json(report.ptr, b, s, n); },
        "json output");
  } else {
    for (uint32_t g = 0; g <= sgt_report_max_genus(report.ptr); ++g)
      text += std::to_string(g) + " " + std::to_string(sgt_report_count(report.ptr, g)) +
              "\n";
  }
  write_output(text, args.out_path);

  const size_t hits = sgt_report_hit_count(report.ptr);
  for (size_t i = 0; i < hits; ++i) {
    uint32_t genus = 0;
    sgt_eliahou_data data{};
    sgt_report_hit(report.ptr, i, &genus, &data);
    uint64_t gens[64];
    size_t count = 0;
    sgt_report_hit_generators(report.ptr, i, gens, 64, &count);
    std::string gen_text;
    for (size_t j = 0; j < count; ++j)
      gen_text += (j ? "," : "") + std::to_string(gens[j]);
    std::fprintf(stderr,
                 "eliahou hit: <%s>|%" PRIu64 " genus %u E=%" PRId64
                 " (c=%" PRIu64 " m=%" PRIu64 " q=%" PRIu64 " rho=%" PRIu64
                 " p=%" PRIu64 " r=%" PRIu64 " k=%" PRIu64 ")\n",
                 gen_text.c_str(), data.conductor, genus, data.constant,
                 data.conductor, data.multiplicity, data.quotient, data.remainder,
                 data.primitive_count, data.right_generator_count, data.rank);
  }
  std::fprintf(stderr, "wall %.3fs\n", sgt_report_wall_seconds(report.ptr));

  if (sgt_report_wilf_violation_count(report.ptr) > 0) {
    std::fprintf(stderr, "Wilf violation found!\n");
    return 3;
  }
  return 0;
}

// ------------------------------------------------------------------- info

int cmd_info(const std::string& gens_text, uint64_t floor_value, uint32_t capacity) {
  const auto gens = parse_uint_list(gens_text);
  SemigroupHandle s;
  check(sgt_semigroup_from_generators(gens.data(), gens.size(), floor_value, capacity,
                                      &s.ptr),
        "construct semigroup");

  const std::string elements = fetch_text(
      [&](char* b, size_t sz, size_t* n) { return sgt_semigroup_elements(s.ptr, b, sz, n); },
      "elements");
  std::cout << "Lambda = " << elements << "\n";

  std::vector<uint64_t> prim(sgt_semigroup_conductor(s.ptr) + 2);
  size_t prim_count = 0;
  check(sgt_semigroup_primitives(s.ptr, prim.data(), prim.size(), &prim_count),
        "primitives");
  std::cout << "generators:";
  for (size_t i = 0; i < prim_count; ++i) std::cout << " " << prim[i];
  std::cout << "\n";

  sgt_eliahou_data e{};
  check(sgt_semigroup_eliahou(s.ptr, &e), "eliahou data");
  std::cout << "c=" << e.conductor << " m=" << e.multiplicity
            << " u=" << sgt_semigroup_jump1(s.ptr) << " v=" << sgt_semigroup_jump2(s.ptr)
            << " g=" << sgt_semigroup_genus(s.ptr) << "\n";
  std::cout << "p=" << e.primitive_count << " r=" << e.right_generator_count
            << " k=" << e.rank << " q=" << e.quotient << " rho=" << e.remainder
            << "\n";
  std::cout << "Wilf inequality: " << e.wilf_right << " >= " << e.wilf_left
            << (e.wilf_holds ? "" : "  VIOLATED") << "\n";
  std::cout << "Eliahou constant: " << e.constant << "\n";
  return e.wilf_holds ? 0 : 3;
}

// ----------------------------------------------------------------- render

int cmd_render(const std::string& gens_text, uint64_t floor_value,
               const std::string& low_rank, uint32_t depth, uint32_t capacity,
               const std::string& out_path) {
  SemigroupHandle s;
  if (!low_rank.empty()) {
    const auto muv = parse_uint_list(low_rank);
    if (muv.size() > 3) fail(SGT_INVALID_ARGUMENT, "--low-rank takes m[,u[,v]]");
    check(sgt_semigroup_low_rank(muv[0], muv.size() > 1 ? muv[1] : 0,
                                 muv.size() > 2 ? muv[2] : 0, capacity, &s.ptr),
          "construct low-rank semigroup");
  } else if (!gens_text.empty()) {
    const auto gens = parse_uint_list(gens_text);
    check(sgt_semigroup_from_generators(gens.data(), gens.size(), floor_value,
                                        capacity, &s.ptr),
          "construct semigroup");
  } else {
    fail(SGT_INVALID_ARGUMENT, "render needs generators or --low-rank");
  }
  const std::string text = fetch_text(
      [&](char* b, size_t sz, size_t* n) {
        return sgt_semigroup_render(s.ptr, depth, b, sz, n);
      },
      "render");
  write_output(text, out_path);
  return 0;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, uint32_t genus) {
  int passed = 0;
  size_t needed = 0;
  sgt_status status = sgt_verify(suite.c_str(), genus, nullptr, 0, &needed, &passed);
  if (status != SGT_BUFFER_TOO_SMALL && status != SGT_OK && status != SGT_VERIFY_FAILED)
    fail(status, "verify");
  std::string log(needed, '\0');
  status = sgt_verify(suite.c_str(), genus, log.data(), log.size(), &needed, &passed);
  log.resize(needed > 0 ? needed - 1 : 0);
  std::cout << log;
  std::cout << (passed ? "PASS" : "FAIL") << "\n";
  if (status != SGT_OK && status != SGT_VERIFY_FAILED)
    fail(status, "verify");
  return passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup tree explorer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sgt_version());

  // explore
  ExploreArgs ex;
  auto* explore = app.add_subcommand("explore", "count semigroups by genus");
  explore->add_option("--genus", ex.genus, "largest genus to visit")->required();
  explore->add_option("--workers", ex.workers, "worker threads (0 = all cores)");
  explore->add_option("--capacity", ex.capacity, "bitstream capacity")
      ->check(CLI::IsMember({128, 256}));
  explore->add_flag("--eliahou", ex.eliahou, "check the Eliahou/Wilf inequalities");
  explore->add_flag("--progress", ex.progress, "report subtree progress on stderr");
  explore->add_option("--format", ex.format, "output format")
      ->check(CLI::IsMember({"human", "tsv", "json"}));
  explore->add_option("--out", ex.out_path, "write output to a file");

  // info
  std::string info_gens;
  uint64_t info_floor = 0;
  uint32_t info_capacity = 128;
  auto* info = app.add_subcommand("info", "describe one semigroup");
  info->add_option("generators", info_gens, "comma-separated generators")->required();
  info->add_option("--floor", info_floor, "include every integer >= floor");
  info->add_option("--capacity", info_capacity, "bitstream capacity")
      ->check(CLI::IsMember({128, 256}));

  // render
  std::string render_gens, render_low_rank, render_out;
  uint64_t render_floor = 0;
  uint32_t render_depth = 3, render_capacity = 128;
  auto* render = app.add_subcommand("render", "print a descendant tree of seed tables");
  render->add_option("generators", render_gens, "comma-separated generators");
  render->add_option("--floor", render_floor, "include every integer >= floor");
  render->add_option("--low-rank", render_low_rank, "m[,u[,v]] closed-form state");
  render->add_option("--depth", render_depth, "tree depth (1-3)")
      ->check(CLI::Range(1u, 3u));
  render->add_option("--capacity", render_capacity, "bitstream capacity")
      ->check(CLI::IsMember({128, 256}));
  render->add_option("--out", render_out, "write output to a file");

  // verify
  std::string verify_suite;
  uint32_t verify_genus = 0;
  auto* verify = app.add_subcommand(
      "verify", "run a property suite (counts, seeds, ggc, eliahou, families)");
  verify->add_option("suite", verify_suite, "suite name")->required();
  verify->add_option("--genus", verify_genus, "genus limit (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*explore) return cmd_explore(ex);
    if (*info) return cmd_info(info_gens, info_floor, info_capacity);
    if (*render)
      return cmd_render(render_gens, render_floor, render_low_rank, render_depth,
                        render_capacity, render_out);
    if (*verify) return cmd_verify(verify_suite, verify_genus);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return exit_code(e.status);
  }
  return 1;
}
