#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "sgtree.h"

namespace {

struct Handle {
  sgt_semigroup* s = nullptr;
  ~Handle() { sgt_semigroup_free(s); }
};

std::string text_of(sgt_status (*fn)(const sgt_semigroup*, char*, size_t, size_t*),
                    const sgt_semigroup* s) {
  size_t needed = 0;
  REQUIRE(fn(s, nullptr, 0, &needed) == SGT_BUFFER_TOO_SMALL);
  std::string text(needed, '\0');
  REQUIRE(fn(s, text.data(), text.size(), &needed) == SGT_OK);
  text.resize(needed - 1);
  return text;
}

}  // namespace

TEST_CASE("construction and queries through the C interface") {
  Handle h;
  const uint64_t left[] = {0, 3, 6};
  REQUIRE(sgt_semigroup_from_elements(left, 3, 8, 128, &h.s) == SGT_OK);
  CHECK(sgt_semigroup_conductor(h.s) == 8);
  CHECK(sgt_semigroup_multiplicity(h.s) == 3);
  CHECK(sgt_semigroup_genus(h.s) == 5);
  CHECK(sgt_semigroup_rank(h.s) == 3);
  CHECK(sgt_semigroup_jump1(h.s) == 3);
  CHECK(sgt_semigroup_jump2(h.s) == 2);
  CHECK(sgt_semigroup_capacity(h.s) == 128);

  CHECK(text_of(sgt_semigroup_gap_bits, h.s) == "11011010");
  CHECK(text_of(sgt_semigroup_seed_bits, h.s) == "10110111");
  CHECK(text_of(sgt_semigroup_elements, h.s) == "{0,3,6,8,9,...}");
  CHECK(text_of(sgt_semigroup_seed_table, h.s) == "101\n101\n11\n");

  uint64_t children = 0, grandchildren = 0, great = 0;
  REQUIRE(sgt_semigroup_descendant_counts(h.s, &children, &grandchildren, &great) ==
          SGT_OK);
  CHECK(children == 2);
  CHECK(grandchildren == 3);
  CHECK(great == 3);

  uint64_t gens[8];
  size_t count = 0;
  REQUIRE(sgt_semigroup_right_generators(h.s, gens, 8, &count) == SGT_OK);
  REQUIRE(count == 2);
  CHECK(gens[0] == 8);
  CHECK(gens[1] == 10);

  Handle child;
  REQUIRE(sgt_semigroup_child(h.s, 8, &child.s) == SGT_OK);
  CHECK(text_of(sgt_semigroup_gap_bits, child.s) == "110110110");
  CHECK(text_of(sgt_semigroup_seed_bits, child.s) == "011011111");
  CHECK(sgt_semigroup_child(h.s, 9, &child.s) == SGT_INVALID_ARGUMENT);
}

TEST_CASE("catalogued Eliahou data through the C interface") {
  Handle h;
  const uint64_t gens[] = {19, 26, 27};
  REQUIRE(sgt_semigroup_from_generators(gens, 3, 90, 0, &h.s) == SGT_OK);
  sgt_eliahou_data e{};
  REQUIRE(sgt_semigroup_eliahou(h.s, &e) == SGT_OK);
  CHECK(e.conductor == 90);
  CHECK(e.multiplicity == 19);
  CHECK(e.quotient == 5);
  CHECK(e.remainder == 5);
  CHECK(e.primitive_count == 7);
  CHECK(e.right_generator_count == 4);
  CHECK(e.rank == 23);
  CHECK(e.constant == -1);
  CHECK(e.wilf_left == 90);
  CHECK(e.wilf_right == 161);
  CHECK(e.wilf_holds == 1);
}

TEST_CASE("family constructors through the C interface") {
  Handle ef, bef;
  REQUIRE(sgt_semigroup_ef(14, 22, 23, 128, &ef.s) == SGT_OK);
  CHECK(sgt_semigroup_genus(ef.s) == 43);
  REQUIRE(sgt_semigroup_bef(9, 128, &bef.s) == SGT_OK);
  CHECK(sgt_semigroup_genus(bef.s) == 67);
  Handle bad;
  CHECK(sgt_semigroup_ef(14, 20, 23, 128, &bad.s) == SGT_INVALID_ARGUMENT);
  CHECK(sgt_semigroup_bef(7, 128, &bad.s) == SGT_INVALID_ARGUMENT);
  CHECK(sgt_semigroup_delgado(3, 0, 0, 0, 128, &bad.s) == SGT_INVALID_ARGUMENT);
  // conductor 300 fits neither width
  const uint64_t gens[] = {2, 301};
  CHECK(sgt_semigroup_from_generators(gens, 2, 300, 128, &bad.s) == SGT_OVERFLOW);
  CHECK(sgt_semigroup_from_generators(gens, 2, 300, 256, &bad.s) == SGT_OVERFLOW);
  // but a 200-conductor instance fits the extended width only
  const uint64_t gens200[] = {2, 201};
  CHECK(sgt_semigroup_from_generators(gens200, 2, 200, 128, &bad.s) == SGT_OVERFLOW);
  Handle wide;
  CHECK(sgt_semigroup_from_generators(gens200, 2, 200, 256, &wide.s) == SGT_OK);
  CHECK(sgt_semigroup_capacity(wide.s) == 256);
  // invalid capacity
  CHECK(sgt_semigroup_natural(100, &bad.s) == SGT_INVALID_ARGUMENT);
}

TEST_CASE("low rank and render through the C interface") {
  Handle h;
  REQUIRE(sgt_semigroup_low_rank(4, 3, 0, 128, &h.s) == SGT_OK);
  CHECK(sgt_semigroup_rank(h.s) == 2);
  size_t needed = 0;
  std::string text(4096, '\0');
  REQUIRE(sgt_semigroup_render(h.s, 3, text.data(), text.size(), &needed) == SGT_OK);
  text.resize(needed - 1);
  // 1 + 3 + 5 + 7 nodes, one "*" per node
  size_t stars = 0;
  for (char c : text) stars += c == '*';
  CHECK(stars == 16);
  REQUIRE(sgt_semigroup_render(h.s, 4, text.data(), text.size(), &needed) ==
          SGT_INVALID_ARGUMENT);
}

TEST_CASE("exploration through the C interface") {
  sgt_explore_options opt{};
  opt.max_genus = 12;
  opt.workers = 2;
  sgt_report* report = nullptr;
  REQUIRE(sgt_explore(&opt, &report) == SGT_OK);
  const uint64_t expected[] = {1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592};
  for (uint32_t g = 0; g <= 12; ++g) CHECK(sgt_report_count(report, g) == expected[g]);
  CHECK(sgt_report_max_genus(report) == 12);
  CHECK(sgt_report_hit_count(report) == 0);
  CHECK(sgt_report_wilf_violation_count(report) == 0);
  CHECK(sgt_report_overflow_genus(report) == -1);
  CHECK(sgt_report_wall_seconds(report) >= 0.0);

  size_t needed = 0;
  std::string tsv(4096, '\0');
  REQUIRE(sgt_report_tsv(report, tsv.data(), tsv.size(), &needed) == SGT_OK);
  tsv.resize(needed - 1);
  CHECK(tsv.find("12\t592\n") != std::string::npos);

  std::string json(65536, '\0');
  REQUIRE(sgt_report_json(report, json.data(), json.size(), &needed) == SGT_OK);
  json.resize(needed - 1);
  // tsv and json carry the same numbers
  CHECK(json.find("592") != std::string::npos);
  CHECK(json.find("\"wall_seconds\"") != std::string::npos);
  CHECK(json.find("\"eliahou_hits\": []") != std::string::npos);

  sgt_report_free(report);
}

TEST_CASE("verification suites through the C interface") {
  int passed = 0;
  size_t needed = 0;
  std::string log(1 << 16, '\0');
  REQUIRE(sgt_verify("counts", 8, log.data(), log.size(), &needed, &passed) == SGT_OK);
  CHECK(passed == 1);
  log.resize(needed - 1);
  CHECK(log.find("counts") != std::string::npos);
  CHECK(sgt_verify("bogus", 0, nullptr, 0, &needed, &passed) == SGT_INVALID_ARGUMENT);
}

TEST_CASE("status names") {
  CHECK(std::strcmp(sgt_status_name(SGT_OK), "ok") == 0);
  CHECK(std::strcmp(sgt_status_name(SGT_OVERFLOW), "capacity overflow") == 0);
  CHECK(sgt_version() != nullptr);
}
