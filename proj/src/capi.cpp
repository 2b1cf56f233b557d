#include "sgtree.h"

#include <cstring>
#include <new>
#include <string>
#include <thread>
#include <variant>

#include <json.hpp>

#include "render.hpp"
#include "tree.hpp"
#include "verify.hpp"
#include "wilf.hpp"

using nlohmann::json;

namespace {

using State128 = sgt::Semigroup<2>;
using State256 = sgt::Semigroup<4>;

}  // namespace

struct sgt_semigroup {
  std::variant<State128, State256> state;

  uint32_t capacity() const { return state.index() == 0 ? 128 : 256; }

  template <typename Fn>
  auto visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), state);
  }
};

struct sgt_report {
  sgt::ExploreReport report;
  uint32_t capacity = 128;
};

namespace {

bool normalize_capacity(uint32_t& capacity_bits) {
  if (capacity_bits == 0) capacity_bits = 128;
  return capacity_bits == 128 || capacity_bits == 256;
}

sgt_status to_status(const std::exception& ex) {
  if (dynamic_cast<const sgt::overflow_error*>(&ex)) return SGT_OVERFLOW;
  if (dynamic_cast<const std::invalid_argument*>(&ex)) return SGT_INVALID_ARGUMENT;
  return SGT_INTERNAL_ERROR;
}

template <typename Fn>
sgt_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& ex) {
    return to_status(ex);
  } catch (...) {
    return SGT_INTERNAL_ERROR;
  }
}

// Runs a templated constructor at the requested width and wraps the result.
template <typename Fn>
sgt_status construct(uint32_t capacity_bits, sgt_semigroup** out, Fn&& fn) {
  if (out == nullptr || !normalize_capacity(capacity_bits)) return SGT_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    auto* handle = new sgt_semigroup;
    try {
      if (capacity_bits == 128)
        handle->state = fn.template operator()<2>();
      else
        handle->state = fn.template operator()<4>();
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
    return SGT_OK;
  });
}

sgt_status copy_text(const std::string& text, char* buf, size_t size, size_t* needed) {
  if (needed == nullptr) return SGT_INVALID_ARGUMENT;
  *needed = text.size() + 1;
  if (buf == nullptr || size < *needed) return SGT_BUFFER_TOO_SMALL;
  std::memcpy(buf, text.c_str(), *needed);
  return SGT_OK;
}

template <unsigned Words>
sgt_eliahou_data eliahou_data_of(const sgt::Semigroup<Words>& st) {
  const auto params = sgt::params_from_state(st);
  sgt_eliahou_data d{};
  d.conductor = params.conductor;
  d.multiplicity = params.multiplicity;
  d.quotient = params.quotient;
  d.remainder = params.remainder;
  d.primitive_count = params.primitive_count;
  d.right_generator_count = params.right_generator_count;
  d.rank = params.rank;
  d.constant = sgt::eliahou_constant(params);
  d.wilf_left = params.conductor;
  d.wilf_right = params.rank * params.primitive_count;
  d.wilf_holds = sgt::wilf_holds(params) ? 1 : 0;
  return d;
}

sgt_eliahou_data eliahou_data_of(const sgt::EliahouParams& params) {
  sgt_eliahou_data d{};
  d.conductor = params.conductor;
  d.multiplicity = params.multiplicity;
  d.quotient = params.quotient;
  d.remainder = params.remainder;
  d.primitive_count = params.primitive_count;
  d.right_generator_count = params.right_generator_count;
  d.rank = params.rank;
  d.constant = sgt::eliahou_constant(params);
  d.wilf_left = params.conductor;
  d.wilf_right = params.rank * params.primitive_count;
  d.wilf_holds = sgt::wilf_holds(params) ? 1 : 0;
  return d;
}

sgt_status copy_list(const std::vector<uint64_t>& values, uint64_t* buf,
                     size_t buf_len, size_t* count) {
  if (count == nullptr) return SGT_INVALID_ARGUMENT;
  *count = values.size();
  if (values.size() > buf_len) return SGT_BUFFER_TOO_SMALL;
  for (size_t i = 0; i < values.size(); ++i) buf[i] = values[i];
  return SGT_OK;
}

json hit_to_json(const sgt::EliahouHit& hit) {
  json h;
  h["genus"] = hit.genus;
  h["conductor"] = hit.conductor;
  h["generators"] = hit.generators;
  h["eliahou_constant"] = hit.constant;
  h["params"] = {{"c", hit.params.conductor},
                 {"m", hit.params.multiplicity},
                 {"q", hit.params.quotient},
                 {"rho", hit.params.remainder},
                 {"p", hit.params.primitive_count},
                 {"r", hit.params.right_generator_count},
                 {"k", hit.params.rank}};
  return h;
}

}  // namespace

extern "C" {

const char* sgt_status_name(sgt_status status) {
  switch (status) {
    case SGT_OK: return "ok";
    case SGT_INVALID_ARGUMENT: return "invalid argument";
    case SGT_OVERFLOW: return "capacity overflow";
    case SGT_VERIFY_FAILED: return "verification failed";
    case SGT_BUFFER_TOO_SMALL: return "buffer too small";
    case SGT_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* sgt_version(void) { return "1.0.0"; }

sgt_status sgt_semigroup_natural(uint32_t capacity_bits, sgt_semigroup** out) {
  return construct(capacity_bits, out, []<unsigned W>() {
    return sgt::natural_numbers<W>();
  });
}

sgt_status sgt_semigroup_from_generators(const uint64_t* generators,
                                         size_t generator_count,
                                         uint64_t floor_value,
                                         uint32_t capacity_bits,
                                         sgt_semigroup** out) {
  if (generators == nullptr && generator_count > 0) return SGT_INVALID_ARGUMENT;
  std::vector<uint64_t> gens(generators, generators + generator_count);
  return construct(capacity_bits, out, [&]<unsigned W>() {
    return sgt::from_generators_with_floor<W>(gens, floor_value);
  });
}

sgt_status sgt_semigroup_from_elements(const uint64_t* left_elements,
                                       size_t left_count, uint64_t conductor,
                                       uint32_t capacity_bits,
                                       sgt_semigroup** out) {
  if (left_elements == nullptr && left_count > 0) return SGT_INVALID_ARGUMENT;
  std::vector<uint64_t> left(left_elements, left_elements + left_count);
  return construct(capacity_bits, out, [&]<unsigned W>() {
    return sgt::state_from_left_elements<W>(left, conductor);
  });
}

sgt_status sgt_semigroup_low_rank(uint64_t m, uint64_t u, uint64_t v,
                                  uint32_t capacity_bits, sgt_semigroup** out) {
  return construct(capacity_bits, out, [&]<unsigned W>() {
    if (u == 0 && v == 0) return sgt::low_rank_state<W>(m);
    if (v == 0) return sgt::low_rank_state<W>(m, u);
    return sgt::low_rank_state<W>(m, u, v);
  });
}

sgt_status sgt_semigroup_ef(uint64_t m, uint64_t a, uint64_t b,
                            uint32_t capacity_bits, sgt_semigroup** out) {
  return construct(capacity_bits, out, [&]<unsigned W>() {
    return sgt::ef_semigroup<W>(m, a, b);
  });
}

sgt_status sgt_semigroup_delgado(uint64_t p, uint64_t tau, uint64_t i, uint64_t j,
                                 uint32_t capacity_bits, sgt_semigroup** out) {
  return construct(capacity_bits, out, [&]<unsigned W>() {
    return sgt::delgado_semigroup<W>(p, tau, i, j);
  });
}

sgt_status sgt_semigroup_bef(uint64_t t, uint32_t capacity_bits,
                             sgt_semigroup** out) {
  return construct(capacity_bits, out, [&]<unsigned W>() {
    return sgt::bef_semigroup<W>(t);
  });
}

sgt_status sgt_semigroup_child(const sgt_semigroup* s, uint64_t removed_generator,
                               sgt_semigroup** out) {
  if (s == nullptr) return SGT_INVALID_ARGUMENT;
  return construct(s->capacity(), out, [&]<unsigned W>() {
    return sgt::remove_right_generator(std::get<sgt::Semigroup<W>>(s->state),
                                       removed_generator);
  });
}

void sgt_semigroup_free(sgt_semigroup* s) { delete s; }

uint64_t sgt_semigroup_conductor(const sgt_semigroup* s) {
  return s ? s->visit([](const auto& st) -> uint64_t { return st.conductor; }) : 0;
}
uint64_t sgt_semigroup_multiplicity(const sgt_semigroup* s) {
  return s ? s->visit([](const auto& st) -> uint64_t { return st.multiplicity; }) : 0;
}
uint64_t sgt_semigroup_genus(const sgt_semigroup* s) {
  return s ? s->visit([](const auto& st) -> uint64_t { return st.genus; }) : 0;
}
uint64_t sgt_semigroup_rank(const sgt_semigroup* s) {
  return s ? s->visit([](const auto& st) -> uint64_t { return st.rank; }) : 0;
}
uint64_t sgt_semigroup_jump1(const sgt_semigroup* s) {
  return s ? s->visit([](const auto& st) -> uint64_t { return st.jump1; }) : 0;
}
uint64_t sgt_semigroup_jump2(const sgt_semigroup* s) {
  return s ? s->visit([](const auto& st) -> uint64_t { return st.jump2; }) : 0;
}
uint32_t sgt_semigroup_capacity(const sgt_semigroup* s) {
  return s ? s->capacity() : 0;
}

sgt_status sgt_semigroup_descendant_counts(const sgt_semigroup* s,
                                           uint64_t* children,
                                           uint64_t* grandchildren,
                                           uint64_t* great_grandchildren) {
  if (!s || !children || !grandchildren || !great_grandchildren)
    return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    const auto d = s->visit([](const auto& st) { return sgt::descendant_counts(st); });
    *children = d.children;
    *grandchildren = d.grandchildren;
    *great_grandchildren = d.great_grandchildren;
    return SGT_OK;
  });
}

sgt_status sgt_semigroup_eliahou(const sgt_semigroup* s, sgt_eliahou_data* out) {
  if (!s || !out) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    *out = s->visit([](const auto& st) { return eliahou_data_of(st); });
    return SGT_OK;
  });
}

sgt_status sgt_semigroup_right_generators(const sgt_semigroup* s, uint64_t* buf,
                                          size_t buf_len, size_t* count) {
  if (!s) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    return copy_list(s->visit([](const auto& st) { return sgt::right_generators(st); }),
                     buf, buf_len, count);
  });
}

sgt_status sgt_semigroup_primitives(const sgt_semigroup* s, uint64_t* buf,
                                    size_t buf_len, size_t* count) {
  if (!s) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    return copy_list(s->visit([](const auto& st) { return sgt::primitives(st); }),
                     buf, buf_len, count);
  });
}

sgt_status sgt_semigroup_gap_bits(const sgt_semigroup* s, char* buf, size_t size,
                                  size_t* needed) {
  if (!s) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    return copy_text(
        s->visit([](const auto& st) { return st.gaps.to_string(st.conductor); }),
        buf, size, needed);
  });
}

sgt_status sgt_semigroup_seed_bits(const sgt_semigroup* s, char* buf, size_t size,
                                   size_t* needed) {
  if (!s) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    return copy_text(
        s->visit([](const auto& st) { return st.seeds.to_string(st.conductor); }),
        buf, size, needed);
  });
}

sgt_status sgt_semigroup_elements(const sgt_semigroup* s, char* buf, size_t size,
                                  size_t* needed) {
  if (!s) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    return copy_text(s->visit([](const auto& st) { return sgt::elements_text(st); }),
                     buf, size, needed);
  });
}

sgt_status sgt_semigroup_seed_table(const sgt_semigroup* s, char* buf, size_t size,
                                    size_t* needed) {
  if (!s) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    std::string text;
    for (const auto& row :
         s->visit([](const auto& st) { return sgt::seed_table(st); }).rows)
      text += row + "\n";
    return copy_text(text, buf, size, needed);
  });
}

sgt_status sgt_semigroup_render(const sgt_semigroup* s, uint32_t depth, char* buf,
                                size_t size, size_t* needed) {
  if (!s) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    return copy_text(
        s->visit([&](const auto& st) { return sgt::render_tree(st, depth); }), buf,
        size, needed);
  });
}

sgt_status sgt_explore(const sgt_explore_options* options, sgt_report** out) {
  if (!options || !out) return SGT_INVALID_ARGUMENT;
  *out = nullptr;
  uint32_t capacity = options->capacity_bits;
  if (!normalize_capacity(capacity)) return SGT_INVALID_ARGUMENT;

  sgt::ExploreOptions opt;
  opt.max_genus = options->max_genus;
  opt.workers = options->workers != 0
                    ? options->workers
                    : std::max(1u, std::thread::hardware_concurrency());
  opt.eliahou = options->eliahou != 0;
  if (options->progress != nullptr) {
    auto fn = options->progress;
    void* user = options->progress_user;
    opt.progress = [fn, user](uint64_t done, uint64_t total) { fn(done, total, user); };
  }

  return guarded([&] {
    auto* handle = new sgt_report;
    handle->capacity = capacity;
    handle->report =
        capacity == 128 ? sgt::explore<2>(opt) : sgt::explore<4>(opt);
    *out = handle;
    return handle->report.ok() ? SGT_OK : SGT_OVERFLOW;
  });
}

void sgt_report_free(sgt_report* r) { delete r; }

uint32_t sgt_report_max_genus(const sgt_report* r) {
  return r ? r->report.max_genus_explored : 0;
}

uint64_t sgt_report_count(const sgt_report* r, uint32_t genus) {
  if (!r || genus >= r->report.counts_by_genus.size()) return 0;
  return r->report.counts_by_genus[genus];
}

double sgt_report_wall_seconds(const sgt_report* r) {
  return r ? r->report.wall_seconds : 0.0;
}

int64_t sgt_report_overflow_genus(const sgt_report* r) {
  return r ? r->report.overflow_genus : -1;
}

size_t sgt_report_hit_count(const sgt_report* r) {
  return r ? r->report.eliahou_hits.size() : 0;
}

size_t sgt_report_wilf_violation_count(const sgt_report* r) {
  return r ? r->report.wilf_violations.size() : 0;
}

sgt_status sgt_report_hit(const sgt_report* r, size_t index, uint32_t* genus,
                          sgt_eliahou_data* data) {
  if (!r || index >= r->report.eliahou_hits.size()) return SGT_INVALID_ARGUMENT;
  const auto& hit = r->report.eliahou_hits[index];
  if (genus) *genus = hit.genus;
  if (data) *data = eliahou_data_of(hit.params);
  return SGT_OK;
}

sgt_status sgt_report_hit_generators(const sgt_report* r, size_t index,
                                     uint64_t* buf, size_t buf_len, size_t* count) {
  if (!r || index >= r->report.eliahou_hits.size()) return SGT_INVALID_ARGUMENT;
  return copy_list(r->report.eliahou_hits[index].generators, buf, buf_len, count);
}

sgt_status sgt_report_tsv(const sgt_report* r, char* buf, size_t size,
                          size_t* needed) {
  if (!r) return SGT_INVALID_ARGUMENT;
  std::string text;
  for (uint32_t g = 0; g < r->report.counts_by_genus.size(); ++g)
    text += std::to_string(g) + "\t" + std::to_string(r->report.counts_by_genus[g]) +
            "\n";
  return copy_text(text, buf, size, needed);
}

sgt_status sgt_report_json(const sgt_report* r, char* buf, size_t size,
                           size_t* needed) {
  if (!r) return SGT_INVALID_ARGUMENT;
  return guarded([&] {
    json doc;
    doc["counts"] = r->report.counts_by_genus;
    doc["eliahou_hits"] = json::array();
    for (const auto& hit : r->report.eliahou_hits)
      doc["eliahou_hits"].push_back(hit_to_json(hit));
    doc["wilf_violations"] = json::array();
    for (const auto& hit : r->report.wilf_violations)
      doc["wilf_violations"].push_back(hit_to_json(hit));
    doc["wall_seconds"] = r->report.wall_seconds;
    if (!r->report.ok()) doc["overflow_genus"] = r->report.overflow_genus;
    return copy_text(doc.dump(2) + "\n", buf, size, needed);
  });
}

sgt_status sgt_verify(const char* suite, uint32_t genus_limit, char* buf,
                      size_t size, size_t* needed, int* passed) {
  if (!suite || !passed) return SGT_INVALID_ARGUMENT;
  return guarded([&]() -> sgt_status {
    const auto result = sgt::verify::run(suite, genus_limit);
    *passed = result.passed ? 1 : 0;
    const sgt_status copy = copy_text(result.log, buf, size, needed);
    if (copy != SGT_OK) return copy;
    return result.passed ? SGT_OK : SGT_VERIFY_FAILED;
  });
}

}  // extern "C"
