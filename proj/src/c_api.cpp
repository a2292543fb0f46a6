#include "borelfix/borelfix.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "borelfix/classify.hpp"
#include "borelfix/error.hpp"
#include "borelfix/lex.hpp"
#include "borelfix/serialize.hpp"

using namespace borelfix;

struct bf_partition {
  GotzmannPartition value;
};
struct bf_ideal {
  MonomialIdeal value;
};
struct bf_ideal_set {
  std::vector<bf_ideal> items;
};

namespace {

thread_local std::string last_error;

bf_status record(bf_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Body>
bf_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return BF_OK;
  } catch (const Error& e) {
    return record(static_cast<bf_status>(static_cast<int>(e.kind())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return record(BF_ERR_INVALID_ARGUMENT, std::string("JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return record(BF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(BF_ERR_INTERNAL, e.what());
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) fail(ErrorKind::InvalidArgument, std::string("null ") + what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T, typename... Args>
T* make(Args&&... args) {
  return new T{std::forward<Args>(args)...};
}

std::vector<int> copy_ints(const int* data, size_t len) {
  if (len > 0) require(data, "array");
  return std::vector<int>(data, data + len);
}

}  // namespace

extern "C" {

const char* bf_version(void) { return "1.0.0"; }
const char* bf_last_error(void) { return last_error.c_str(); }
void bf_string_free(char* s) { delete[] s; }

bf_status bf_partition_new(const int* parts, size_t len, bf_partition** out) {
  return guarded([&] {
    require(out, "output");
    *out = make<bf_partition>(GotzmannPartition(copy_ints(parts, len)));
  });
}

bf_status bf_partition_parse(const char* text, bf_partition** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = make<bf_partition>(GotzmannPartition(parse_int_list(text)));
  });
}

bf_status bf_partition_from_macaulay(const int* parts, size_t len, bf_partition** out) {
  return guarded([&] {
    require(out, "output");
    *out = make<bf_partition>(from_macaulay(MacaulayPartition(copy_ints(parts, len))));
  });
}

void bf_partition_free(bf_partition* p) { delete p; }

size_t bf_partition_length(const bf_partition* p) { return p ? p->value.size() : 0; }

int bf_partition_part(const bf_partition* p, size_t index) {
  if (!p || index >= p->value.size()) return -1;
  return p->value[index];
}

bf_status bf_partition_to_macaulay(const bf_partition* p, int* buf, size_t cap, size_t* len) {
  return guarded([&] {
    require(p, "partition");
    const auto e = to_macaulay(p->value).parts();
    if (len) *len = e.size();
    for (size_t i = 0; i < e.size() && i < cap; ++i) buf[i] = e[i];
  });
}

bf_status bf_partition_evaluate(const bf_partition* p, long long t, char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    *out = copy_string(to_decimal(evaluate(p->value, t)));
  });
}

bf_status bf_partition_apply_A(const bf_partition* p, bf_partition** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    *out = make<bf_partition>(apply_A(p->value));
  });
}

bf_status bf_partition_apply_Phi(const bf_partition* p, bf_partition** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    *out = make<bf_partition>(apply_Phi(p->value));
  });
}

bf_status bf_partition_apply_nabla(const bf_partition* p, bf_partition** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    *out = make<bf_partition>(apply_nabla(p->value));
  });
}

bf_status bf_partition_peel(long long base, const long long* values, size_t count,
                            bf_partition** out) {
  return guarded([&] {
    require(out, "output");
    if (count > 0) require(values, "values");
    SampledPolynomial s{base, {}};
    for (size_t i = 0; i < count; ++i) s.values.emplace_back(values[i]);
    *out = make<bf_partition>(peel_to_partition(s));
  });
}

bf_status bf_partition_to_json(const bf_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    *out = copy_string(to_json(p->value).dump());
  });
}

bf_status bf_ideal_parse(const char* text, int num_vars, bf_ideal** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = make<bf_ideal>(parse_ideal(text, num_vars));
  });
}

bf_status bf_ideal_from_json(const char* json, bf_ideal** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = make<bf_ideal>(ideal_from_json(Json::parse(json)));
  });
}

bf_status bf_ideal_from_exponents(int num_vars, const int* exponents, size_t num_gens,
                                  bf_ideal** out) {
  return guarded([&] {
    require(out, "output");
    if (num_vars < 1) fail(ErrorKind::InvalidArgument, "num_vars must be positive");
    if (num_gens > 0) require(exponents, "exponents");
    std::vector<Monomial> gens;
    for (size_t g = 0; g < num_gens; ++g) {
      const int* row = exponents + g * static_cast<size_t>(num_vars);
      gens.emplace_back(std::vector<int>(row, row + num_vars));
    }
    *out = make<bf_ideal>(minimalize(std::move(gens), num_vars));
  });
}

void bf_ideal_free(bf_ideal* ideal) { delete ideal; }

int bf_ideal_num_vars(const bf_ideal* ideal) { return ideal ? ideal->value.num_vars() : 0; }

size_t bf_ideal_num_generators(const bf_ideal* ideal) {
  return ideal ? ideal->value.generators().size() : 0;
}

bf_status bf_ideal_generator(const bf_ideal* ideal, size_t index, int* exponents_out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(exponents_out, "output");
    if (index >= ideal->value.generators().size())
      fail(ErrorKind::InvalidArgument, "generator index out of range");
    const auto& e = ideal->value.generators()[index].exponents();
    std::copy(e.begin(), e.end(), exponents_out);
  });
}

bf_status bf_ideal_to_json(const bf_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = copy_string(to_json(ideal->value).dump());
  });
}

bf_status bf_ideal_to_string(const bf_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = copy_string(to_human(ideal->value));
  });
}

int bf_ideal_equal(const bf_ideal* a, const bf_ideal* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

bf_status bf_ideal_contains(const bf_ideal* ideal, const int* exponents, int* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(exponents, "exponents");
    require(out, "output");
    const int nv = ideal->value.num_vars();
    *out = contains(ideal->value, Monomial(std::vector<int>(exponents, exponents + nv))) ? 1 : 0;
  });
}

bf_status bf_ideal_hilbert_function(const bf_ideal* ideal, int degree, long long* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = hilbert_function(ideal->value, degree);
  });
}

bf_status bf_ideal_hilbert_polynomial(const bf_ideal* ideal, int reg_hint, bf_partition** out,
                                      int* stabilization_degree, int* window_retries) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    const auto data = hilbert_polynomial(
        ideal->value, reg_hint < 0 ? std::nullopt : std::optional<int>(reg_hint));
    *out = data.polynomial ? make<bf_partition>(*data.polynomial) : nullptr;
    if (stabilization_degree) *stabilization_degree = data.stabilization_degree;
    if (window_retries) *window_retries = data.window_retries;
  });
}

bf_status bf_ideal_hilbert_json(const bf_ideal* ideal, int reg_hint, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    const auto data = hilbert_polynomial(
        ideal->value, reg_hint < 0 ? std::nullopt : std::optional<int>(reg_hint));
    *out = copy_string(to_json(data).dump());
  });
}

bf_status bf_ideal_saturate(const bf_ideal* ideal, int k, bf_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = make<bf_ideal>(saturate_wrt(ideal->value, k));
  });
}

bf_status bf_ideal_lift(const bf_ideal* ideal, bf_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = make<bf_ideal>(lift(ideal->value));
  });
}

bf_status bf_ideal_nabla(const bf_ideal* ideal, bf_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = make<bf_ideal>(nabla_ideal(ideal->value));
  });
}

bf_status bf_leq_p(int k, int l, int ch, int* out) {
  return guarded([&] {
    require(out, "output");
    *out = leq_p(k, l, Characteristic(ch)) ? 1 : 0;
  });
}

bf_status bf_ideal_is_p_borel(const bf_ideal* ideal, int ch, int* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = is_p_borel(ideal->value, Characteristic(ch)) ? 1 : 0;
  });
}

bf_status bf_ideal_is_strongly_stable(const bf_ideal* ideal, int* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = is_strongly_stable(ideal->value) ? 1 : 0;
  });
}

bf_status bf_borel_closure(const bf_ideal* gens, int ch, bf_ideal** out) {
  return guarded([&] {
    require(gens, "ideal");
    require(out, "output");
    *out = make<bf_ideal>(
        borel_closure(gens->value.generators(), Characteristic(ch), gens->value.num_vars()));
  });
}

bf_status bf_expandable_generators(const bf_ideal* ideal, bf_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = make<bf_ideal>(
        minimalize(expandable_generators(ideal->value), ideal->value.num_vars()));
  });
}

bf_status bf_expand(const bf_ideal* ideal, const int* generator, bf_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(generator, "generator");
    require(out, "output");
    const int nv = ideal->value.num_vars();
    *out = make<bf_ideal>(expand(ideal->value, Monomial(std::vector<int>(generator, generator + nv))));
  });
}

bf_status bf_lex_from_counts(const int* counts, size_t len, bf_ideal** out) {
  return guarded([&] {
    require(out, "output");
    *out = make<bf_ideal>(lex_from_counts(LexCounts{copy_ints(counts, len)}));
  });
}

bf_status bf_lex_from_partition(const bf_partition* p, int n, bf_ideal** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    *out = make<bf_ideal>(lex_from_partition(p->value, n));
  });
}

namespace {

bf_ideal_set* to_handle(const IdealSet& ideals) {
  auto* set = new bf_ideal_set;
  for (const auto& ideal : ideals) set->items.push_back(bf_ideal{ideal});
  return set;
}

}  // namespace

bf_status bf_reeves(const bf_partition* p, int n, bf_ideal_set** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    *out = to_handle(enumerate_strongly_stable(p->value, n));
  });
}

bf_status bf_oracle(const bf_partition* p, int n, int ch, int force, bf_ideal_set** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    OracleOptions options;
    options.force = force != 0;
    *out = to_handle(enumerate_p_borel(p->value, n, Characteristic(ch), options));
  });
}

size_t bf_ideal_set_size(const bf_ideal_set* set) { return set ? set->items.size() : 0; }

const bf_ideal* bf_ideal_set_get(const bf_ideal_set* set, size_t index) {
  if (!set || index >= set->items.size()) return nullptr;
  return &set->items[index];
}

bf_status bf_ideal_set_to_json(const bf_ideal_set* set, char** out) {
  return guarded([&] {
    require(set, "ideal set");
    require(out, "output");
    Json arr = Json::array();
    for (const auto& item : set->items) arr.push_back(to_json(item.value));
    *out = copy_string(arr.dump());
  });
}

void bf_ideal_set_free(bf_ideal_set* set) { delete set; }

bf_status bf_classify(const bf_partition* p, int n, int ch, int verify, const char* method,
                      int force, char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    const SchemeCoordinates coords(p->value, n, Characteristic(ch));
    ClassificationVerdict verdict = predict(coords);
    Json j;
    j["partition"] = to_json(coords.partition);
    j["n"] = coords.n;
    j["char"] = coords.ch.value();
    j["codim"] = coords.codim();
    const auto label = [](const std::optional<std::string>& s) {
      return s ? Json(*s) : Json(nullptr);
    };
    const bool codim_one = coords.codim() <= 1;
    j["unique_clause"] = label(predicate_unique(coords));
    j["two_clause"] = codim_one ? Json(nullptr) : label(predicate_two(coords));
    j["three_clause"] = codim_one ? Json(nullptr) : label(predicate_three_family(coords));
    if (verify) {
      OracleOptions options;
      options.force = force != 0;
      const auto counted = count_borel_fixed(
          coords, count_method_from_string(method ? method : "auto"), options);
      verdict.verified_count = counted.count;
      j.update(to_json(verdict));
      j["method"] = to_string(counted.used);
      j["ideals"] = to_json(counted.ideals);
    } else {
      j.update(to_json(verdict));
    }
    *out = copy_string(j.dump());
  });
}

bf_status bf_verify(const char* grid_json, int with_ideals, int force, char** out) {
  return guarded([&] {
    require(out, "output");
    const bool use_default = grid_json == nullptr || std::string(grid_json) == "default";
    const auto grid = use_default ? default_grid() : grid_from_json(Json::parse(grid_json));
    OracleOptions options;
    options.force = force != 0;
    *out = copy_string(to_json(verify_classification(grid, options), with_ideals != 0).dump());
  });
}

bf_status bf_tree(int codim, int depth, int max_depth, char** out) {
  return guarded([&] {
    require(out, "output");
    TreeOptions options;
    if (max_depth > 0) options.max_depth = max_depth;
    *out = copy_string(to_json(tree_explore(codim, depth, options)).dump());
  });
}

}  // extern "C"
