#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linedegen/chern.hpp"
#include "linedegen/degeneration.hpp"
#include "linedegen/serialize.hpp"
#include "linedegen/witness.hpp"

namespace linedegen {

enum class Status { ok, identity_violation, argument_error };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::identity_violation: return "identity-violation";
    case Status::argument_error: return "argument-error";
  }
  return "argument-error";
}

/// Result of one CLI command: a JSON payload plus a human-readable table.
struct OutputEnvelope {
  std::string command;
  json parameters = json::object();
  json results = json::array();
  Status status = Status::ok;
  std::vector<std::string> header;
  std::vector<std::string> rows;
  std::string error;

  json to_json() const {
    return {{"command", command}, {"parameters", parameters}, {"results", results}, {"status", to_string(status)}};
  }

  int exit_code() const {
    switch (status) {
      case Status::ok: return 0;
      case Status::identity_violation: return 1;
      case Status::argument_error: return 2;
    }
    return 2;
  }
};

namespace detail {

inline OutputEnvelope guarded(std::string command, json parameters,
                              const std::function<void(OutputEnvelope&)>& body) {
  OutputEnvelope env;
  env.command = std::move(command);
  env.parameters = std::move(parameters);
  try {
    body(env);
  } catch (const ArgumentError& e) {
    env.status = Status::argument_error;
    env.results = json::array({json{{"error", e.what()}}});
    env.header.clear();
    env.rows.clear();
    env.error = e.what();
  }
  return env;
}

/// Number when the class is a multiple of the point class, class otherwise.
inline std::string render_class(const ChowElement& x) {
  const unsigned top = x.context().dim();
  for (const auto& [part, c] : x.coeffs())
    if (part.size() != top) return x.str();
  return to_decimal(integrate(x));
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline OutputEnvelope cmd_count(unsigned n, unsigned d) {
  return detail::guarded("count", {{"n", n}, {"d", d}}, [&](OutputEnvelope& env) {
    const ChowElement cls = total_class(n, d);
    json count = nullptr;
    if (d + 1 == 2 * (n - 1)) count = to_decimal(integrate(cls));
    env.results.push_back({{"class", chow_to_json(cls)}, {"count", count}});
    env.header.push_back("lines on a generic degree-" + std::to_string(d) + " hypersurface in P^" +
                         std::to_string(n));
    env.rows.push_back(detail::render_class(cls));
  });
}

inline OutputEnvelope cmd_split(unsigned n, unsigned d, unsigned k) {
  return detail::guarded("split", {{"n", n}, {"d", d}, {"k", k}}, [&](OutputEnvelope& env) {
    const DegenerationReport r = report(n, d, k);
    env.results.push_back(report_to_json(r));
    if (!r.sum_matches) env.status = Status::identity_violation;
    env.header.push_back("c(" + std::to_string(d) + "," + std::to_string(r.k) + ") | c(" + std::to_string(d) + "," +
                         std::to_string(r.l) + ") | total | status");
    env.rows.push_back(detail::render_class(r.class_k) + " | " + detail::render_class(r.class_l) + " | " +
                       detail::render_class(r.total) + " | " + to_string(env.status));
  });
}

enum class VerifyKind { thm33, prop311, lemma34, eq36, lemma37 };

inline std::optional<VerifyKind> parse_verify_kind(const std::string& s) {
  if (s == "thm33") return VerifyKind::thm33;
  if (s == "prop311") return VerifyKind::prop311;
  if (s == "lemma34") return VerifyKind::lemma34;
  if (s == "eq36") return VerifyKind::eq36;
  if (s == "lemma37") return VerifyKind::lemma37;
  return std::nullopt;
}

struct VerifyBounds {
  std::optional<unsigned> max_sum;
  std::optional<unsigned> max_k;
  std::optional<unsigned> max_l;
};

namespace detail {

inline unsigned require_bound(const std::optional<unsigned>& v, const char* flag) {
  if (!v) throw ArgumentError(std::string("missing required bound ") + flag);
  if (*v < 1) throw ArgumentError(std::string(flag) + " must be >= 1");
  return *v;
}

}  // namespace detail

/// Sweeps one identity over its parameter grid in row-major order.
inline OutputEnvelope cmd_verify(const std::string& kind_name, const VerifyBounds& bounds) {
  json params{{"kind", kind_name}};
  if (bounds.max_sum) params["max_sum"] = *bounds.max_sum;
  if (bounds.max_k) params["max_k"] = *bounds.max_k;
  if (bounds.max_l) params["max_l"] = *bounds.max_l;
  return detail::guarded("verify", params, [&](OutputEnvelope& env) {
    const auto kind = parse_verify_kind(kind_name);
    if (!kind) throw ArgumentError("unknown identity '" + kind_name + "' (thm33, prop311, lemma34, eq36, lemma37)");
    std::optional<std::string> first_failure;
    std::size_t cells = 0;
    auto record = [&](json cell, bool pass, const std::string& label) {
      cell["pass"] = pass;
      env.results.push_back(std::move(cell));
      env.rows.push_back(label + " " + (pass ? "pass" : "FAIL"));
      ++cells;
      if (!pass && !first_failure) first_failure = label;
    };
    switch (*kind) {
      case VerifyKind::thm33: {
        const unsigned max_sum = detail::require_bound(bounds.max_sum, "--max-sum");
        env.header.push_back("c_{k+1}(k) c_l(k+l,k) + c_{l+1}(l) c_k(k+l,l) = c_{k+l+1}(k+l)");
        for (unsigned k = 1; k < max_sum; ++k)
          for (unsigned l = 1; k + l <= max_sum; ++l)
            record({{"k", k}, {"l", l}}, verify_degeneration_identity(k, l),
                   "k=" + std::to_string(k) + " l=" + std::to_string(l));
        break;
      }
      case VerifyKind::prop311: {
        const unsigned max_k = detail::require_bound(bounds.max_k, "--max-k");
        const unsigned max_l = detail::require_bound(bounds.max_l, "--max-l");
        env.header.push_back("c_{l+1}(S^{k+l} - S^k) = lambda c_{l+1}(S^l), lambda = sum_j C(l+j, j)");
        for (unsigned k = 1; k <= max_k; ++k)
          for (unsigned l = 1; l <= max_l; ++l) {
            const MultiplicityCheck r = verify_degeneracy_multiplicity(k, l);
            record({{"k", k}, {"l", l}, {"lambda", to_decimal(r.lambda)}, {"expected_lambda", to_decimal(r.expected_lambda)}},
                   r.holds, "k=" + std::to_string(k) + " l=" + std::to_string(l) + " lambda=" + to_decimal(r.lambda));
          }
        break;
      }
      case VerifyKind::lemma34: {
        const unsigned max_l = detail::require_bound(bounds.max_l, "--max-l");
        env.header.push_back("l! (a-b)^l f_i = sum_j (-1)^(i+j) C(l,j) [(l-j)a+jb]^(l+i), i <= l+4");
        for (unsigned l = 1; l <= max_l; ++l)
          record({{"l", l}, {"i_max", l + 4}}, verify_segre_closed_form(l, l + 4), "l=" + std::to_string(l));
        break;
      }
      case VerifyKind::eq36: {
        const unsigned max_l = detail::require_bound(bounds.max_l, "--max-l");
        env.header.push_back("sum_j (-1)^(j+l) C(l,j) prod_{i!=j} [(l-i)a+ib] = l! (a-b)^l");
        for (unsigned l = 1; l <= max_l; ++l)
          record({{"l", l}}, verify_root_product_identity(l), "l=" + std::to_string(l));
        break;
      }
      case VerifyKind::lemma37: {
        const unsigned max_l = detail::require_bound(bounds.max_l, "--max-l");
        env.header.push_back("sum_j (-1)^j C(l,j) [(l-j)a+jb]^n = 0, 0 <= n < l");
        for (unsigned l = 1; l <= max_l; ++l)
          record({{"l", l}}, verify_power_sum_vanishing(l), "l=" + std::to_string(l));
        break;
      }
    }
    if (first_failure) {
      env.status = Status::identity_violation;
      env.rows.push_back("first counterexample: " + *first_failure);
    } else {
      env.rows.push_back("all pass (" + std::to_string(cells) + " cells)");
    }
  });
}

inline OutputEnvelope cmd_normal_types(unsigned n, unsigned k) {
  return detail::guarded("normal-types", {{"n", n}, {"k", k}}, [&](OutputEnvelope& env) {
    const NormalTypesResult r = normal_bundle_types(n, k);
    env.results.push_back(normal_types_to_json(r));
    env.header.push_back("normal bundle splitting types of a line on a generic degree-" + std::to_string(k) +
                         " hypersurface in P^" + std::to_string(n));
    for (const auto& t : r.types) {
      std::string row = "(";
      for (std::size_t i = 0; i < t.entries.size(); ++i) row += (i ? ", " : "") + std::to_string(t.entries[i]);
      env.rows.push_back(row + ")");
    }
    if (r.advisory) env.rows.push_back("none: " + *r.advisory);
  });
}

inline OutputEnvelope cmd_witness(unsigned n, unsigned d, unsigned k) {
  return detail::guarded("witness", {{"n", n}, {"d", d}, {"k", k}}, [&](OutputEnvelope& env) {
    const WitnessProblem problem(n, d, k);
    const WitnessReport w = witness_report(problem);
    env.results.push_back(witness_to_json(w));
    if (!w.all_pass()) env.status = Status::identity_violation;
    env.header.push_back("explicit witness for n=" + std::to_string(n) + " d=" + std::to_string(d) +
                         " k=" + std::to_string(k));
    env.rows.push_back("phi surjective: " + detail::yes_no(w.phi_surjective));
    env.rows.push_back("kernel dim: " + std::to_string(w.kernel_dim) + " (expected " +
                       std::to_string(w.expected_kernel_dim) + ")");
    env.rows.push_back("restriction surjective: " + detail::yes_no(w.restriction_surjective));
    env.rows.push_back("nodes distinct: " + detail::yes_no(w.nodes_distinct));
    env.rows.push_back(w.all_pass() ? "all checks pass" : "check failed");
  });
}

}  // namespace linedegen
