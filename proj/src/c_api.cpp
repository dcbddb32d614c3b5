#include "shoda/shoda.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>

#include "shoda/commutator.hpp"
#include "shoda/json_io.hpp"
#include "shoda/norms.hpp"
#include "shoda/projections.hpp"
#include "shoda/spectral.hpp"

struct shoda_algebra {
  shoda::AlgebraSpec spec;
};

struct shoda_element {
  shoda::Element value;
};

namespace {

using shoda::json::Json;

static_assert(static_cast<int>(shoda::ErrorKind::InternalError) + 1 == SHODA_INTERNAL_ERROR);
static_assert(static_cast<int>(shoda::ErrorKind::NotTraceless) + 1 == SHODA_NOT_TRACELESS);

shoda_status status_of(shoda::ErrorKind kind) { return static_cast<shoda_status>(static_cast<int>(kind) + 1); }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) {
  if (out != nullptr) *out = copy_string(j.dump());
}

shoda_status report_failure(char** out, shoda_status status, const std::string& detail) {
  emit(out, shoda::json::error_to_json(shoda_status_name(status), detail));
  return status;
}

// Runs `body`, translating every exception into a status code and an error
// report.
shoda_status guarded(char** out, const std::function<Json()>& body) {
  if (out != nullptr) *out = nullptr;
  try {
    emit(out, body());
    return SHODA_OK;
  } catch (const shoda::Error& e) {
    return report_failure(out, status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return report_failure(out, SHODA_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return report_failure(out, SHODA_INTERNAL_ERROR, e.what());
  }
}

shoda_options resolve(const shoda_options* options) {
  const shoda_options o = options != nullptr ? *options : shoda_default_options();
  if (!(o.tol > 0.0)) shoda::fail(shoda::ErrorKind::InvalidArgument, "tol must be positive");
  if (o.samples < 1) shoda::fail(shoda::ErrorKind::InvalidArgument, "samples must be at least 1");
  return o;
}

void require(const void* p, const char* what) {
  if (p == nullptr) shoda::fail(shoda::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

Json path_to_json(const std::vector<shoda::Element>& path, double tol) {
  Json samples = Json::array();
  Json ranks = Json::array();
  for (const auto& e : path) {
    samples.push_back(shoda::json::to_json(e));
    ranks.push_back(shoda::rank(e, tol));
  }
  return Json{{"samples", path.size()}, {"ranks", std::move(ranks)}, {"path", std::move(samples)}};
}

}  // namespace

extern "C" {

shoda_options shoda_default_options(void) { return shoda_options{shoda::kDefaultTol, 42, 1000}; }

const char* shoda_status_name(shoda_status status) {
  if (status == SHODA_OK) return "Ok";
  if (status < SHODA_OK || status > SHODA_INTERNAL_ERROR) return "Unknown";
  return shoda::error_name(static_cast<shoda::ErrorKind>(static_cast<int>(status) - 1)).data();
}

void shoda_string_free(char* s) { std::free(s); }

shoda_status shoda_algebra_from_json(const char* json, shoda_algebra** out, char** error) {
  if (out != nullptr) *out = nullptr;
  return guarded(error, [&]() -> Json {
    require(json, "json");
    require(out, "out");
    *out = new shoda_algebra{shoda::json::spec_from_json(shoda::json::parse(json))};
    return Json::object();
  });
}

void shoda_algebra_free(shoda_algebra* algebra) { delete algebra; }

shoda_status shoda_element_from_json(const shoda_algebra* algebra, const char* json, shoda_element** out,
                                     char** error) {
  if (out != nullptr) *out = nullptr;
  return guarded(error, [&]() -> Json {
    require(algebra, "algebra");
    require(json, "json");
    require(out, "out");
    *out = new shoda_element{shoda::json::element_from_json(algebra->spec, shoda::json::parse(json))};
    return Json::object();
  });
}

shoda_status shoda_element_to_json(const shoda_element* element, char** out) {
  return guarded(out, [&] {
    require(element, "element");
    return shoda::json::to_json(element->value);
  });
}

void shoda_element_free(shoda_element* element) { delete element; }

shoda_status shoda_info(const shoda_algebra* algebra, char** out) {
  return guarded(out, [&] {
    require(algebra, "algebra");
    const auto& spec = algebra->spec;
    return Json{{"blocks", spec.block_dims()},
                {"num_blocks", spec.num_blocks()},
                {"N", spec.order()},
                {"dimension", spec.dimension()},
                {"extension_dimension", spec.order() * spec.order()}};
  });
}

shoda_status shoda_complete(const shoda_algebra* algebra, const shoda_options* options, int include_table,
                            char** out) {
  return guarded(out, [&] {
    require(algebra, "algebra");
    const shoda_options o = resolve(options);
    return shoda::json::to_json(shoda::complete(algebra->spec, o.tol, o.seed), include_table != 0);
  });
}

shoda_status shoda_check(const shoda_algebra* algebra, const shoda_options* options, char** out) {
  return guarded(out, [&] {
    require(algebra, "algebra");
    const shoda_options o = resolve(options);
    return shoda::json::to_json(shoda::is_shoda_complete(algebra->spec, o.tol, o.seed));
  });
}

shoda_status shoda_norm_audit(const shoda_algebra* algebra, const shoda_options* options, char** out) {
  return guarded(out, [&] {
    require(algebra, "algebra");
    const shoda_options o = resolve(options);
    const auto audit = shoda::submultiplicativity_audit(algebra->spec, o.samples, o.seed);
    const double iso = shoda::isometry_check(algebra->spec, o.samples, o.seed, o.tol);
    return Json{{"samples", o.samples},
                {"worst_ratio", audit.worst()},
                {"right_action", audit.right_action},
                {"left_action", audit.left_action},
                {"tensor_product", audit.tensor_product},
                {"full", audit.full},
                {"submultiplicative", audit.worst() <= 1.0 + shoda::kSubmultiplicativeSlack},
                {"isometry_dev", iso},
                {"norm_on_A", "max-block-operator"}};
  });
}

shoda_status shoda_rank(const shoda_element* element, const shoda_options* options, char** out) {
  return guarded(out, [&] {
    require(element, "element");
    const shoda_options o = resolve(options);
    return Json{{"rank", shoda::rank(element->value, o.tol)},
                {"block_ranks", shoda::block_ranks(element->value, o.tol)}};
  });
}

shoda_status shoda_trace(const shoda_element* element, char** out) {
  return guarded(out, [&] {
    require(element, "element");
    Json blocks = Json::array();
    for (auto t : shoda::block_traces(element->value)) blocks.push_back(shoda::json::to_json(t));
    return Json{{"trace", shoda::json::to_json(shoda::trace(element->value))}, {"block_traces", std::move(blocks)}};
  });
}

shoda_status shoda_spectrum(const shoda_element* element, const shoda_options* options, char** out) {
  return guarded(out, [&] {
    require(element, "element");
    const shoda_options o = resolve(options);
    return shoda::json::to_json(shoda::spectrum(element->value, o.tol));
  });
}

shoda_status shoda_riesz(const shoda_element* element, double re, double im, const shoda_options* options,
                         char** out) {
  return guarded(out, [&] {
    require(element, "element");
    const shoda_options o = resolve(options);
    const auto& a = element->value;
    const shoda::Element p = shoda::riesz_projection(a, shoda::Scalar(re, im), o.tol);
    return Json{{"lambda", shoda::json::to_json(shoda::Scalar(re, im))},
                {"projection", shoda::json::to_json(p)},
                {"rank", shoda::rank(p, o.tol)},
                {"idempotency_defect", shoda::norm_distance(p * p, p)},
                {"commutator_defect", shoda::norm_distance(p * a, a * p)}};
  });
}

shoda_status shoda_decompose(const shoda_element* element, const shoda_options* options, int in_completion,
                             char** out) {
  return guarded(out, [&] {
    require(element, "element");
    const shoda_options o = resolve(options);
    if (in_completion != 0) return shoda::json::to_json(shoda::decompose_in_completion(element->value, o.tol, o.seed));
    return shoda::json::to_json(shoda::commutator_decompose(element->value, o.tol, o.seed));
  });
}

shoda_status shoda_projection_path(const shoda_element* p, const shoda_element* q, const shoda_options* options,
                                   char** out) {
  return guarded(out, [&] {
    require(p, "p");
    require(q, "q");
    const shoda_options o = resolve(options);
    const auto path = shoda::projection_path(p->value, q->value, o.samples, o.tol, o.seed);
    double defect = 0.0;
    for (const auto& e : path) defect = std::max(defect, shoda::norm_distance(e * e, e));
    Json report = path_to_json(path, o.tol);
    report["kind"] = "projection";
    report["max_idempotency_defect"] = defect;
    return report;
  });
}

shoda_status shoda_rank_path(const shoda_element* a, const shoda_element* b, int32_t n, const shoda_options* options,
                             char** out) {
  return guarded(out, [&] {
    require(a, "a");
    require(b, "b");
    const shoda_options o = resolve(options);
    Json report = path_to_json(shoda::rank_preserving_path(a->value, b->value, n, o.samples, o.tol, o.seed), o.tol);
    report["kind"] = "rank";
    report["n"] = n;
    return report;
  });
}

}  // extern "C"
