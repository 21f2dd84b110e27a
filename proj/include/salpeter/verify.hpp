#pragma once

// Grid verification: every exact method against every other, the ladder
// algebra against the radial formulas, and the quadrature oracle against the
// exact moments. Each grid point is an independent task.

#include "salpeter/formulas.hpp"
#include "salpeter/kramers.hpp"
#include "salpeter/ladder2d.hpp"
#include "salpeter/laguerre_me.hpp"
#include "salpeter/oracle.hpp"
#include "salpeter/spectrum.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace salpeter {

struct VerifyGrid {
  std::string name;
  int d_max = 10;
  int nl_max = 10;          // n, l in [0, nl_max] for d >= 2
  int N1_max = 20;          // d = 1 levels
  int N2d_max = 20;         // ladder states
  int degeneracy_N_max = 30;
  std::vector<int> oracle_dims{2, 3, 5};
  int oracle_nl_max = 4;
  int oracle_s_max = 8;
};

inline VerifyGrid verify_grid(const std::string& preset) {
  if (preset == "small") return {"small", 4, 4, 8, 8, 10, {2, 3}, 2, 4};
  if (preset == "default") return {"default", 10, 10, 20, 20, 30, {2, 3, 5}, 4, 8};
  if (preset == "large") return {"large", 10, 25, 50, 40, 30, {2, 3, 5}, 8, 8};
  throw std::invalid_argument("unknown grid preset '" + preset + "' (expected small, default or large)");
}

struct VerifyEntry {
  std::string case_id;
  std::string method;
  std::string value_pq;   // empty for real-valued oracle entries
  std::string value_dec;
  bool pass = true;
};

struct VerifyReport {
  std::string grid;
  bool perturbed = false;
  std::vector<VerifyEntry> entries;

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass; });
  }
  const VerifyEntry* first_failure() const {
    for (const auto& e : entries)
      if (!e.pass) return &e;
    return nullptr;
  }
  std::size_t failure_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const VerifyEntry& e) { return !e.pass; }));
  }
};

struct VerifyOptions {
  /// Flip the sign of the 6 n^2 term of the first-order closed form.
  bool perturb = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

/// Closed-form first-order value, optionally with the fault injected.
inline Rational closed_form_eps1(const QuantumNumbers& q, bool perturb) {
  Rational v = epsilon1_general(q);
  if (perturb) {
    const Rational n = q.n();
    v += Rational(12, 8) * n * n;  // -(1/8)(-6 n^2) - (-(1/8)(6 n^2))
  }
  return v;
}

inline VerifyEntry exact_entry(const std::string& case_id, const std::string& method, const Rational& v, bool pass) {
  return {case_id, method, to_pq(v), to_decimal(v), pass};
}

inline VerifyEntry real_entry(const std::string& case_id, const std::string& method, const Real& v, bool pass) {
  return {case_id, method, "", to_decimal(v), pass};
}

/// Records every method value against the first; all must agree exactly.
inline void agree_exact(std::vector<VerifyEntry>& out, const std::string& case_id,
                        const std::vector<std::pair<std::string, Rational>>& values) {
  const Rational& ref = values.front().second;
  for (const auto& [method, v] : values) out.push_back(exact_entry(case_id, method, v, v == ref));
}

inline bool within_relative(const Real& got, const Real& want, double tol) {
  const Real scale = std::max(Real(abs(want)), Real(1e-300));
  return abs(got - want) <= tol * scale;
}

inline std::vector<VerifyEntry> verify_radial_state(const QuantumNumbers& q, bool perturb) {
  std::vector<VerifyEntry> out;
  const std::string c = q.to_string();
  agree_exact(out, c + " eps1",
              {{"closed-form", closed_form_eps1(q, perturb)},
               {"rewritten", epsilon1_rewritten(q)},
               {"kramers", first_order_method1(q)},
               {"laguerre", first_order_method2(q)}});
  agree_exact(out, c + " eps2", {{"closed-form", epsilon2_general(q)}, {"laguerre", second_order_method2(q)}});
  const Rational e1 = closed_form_eps1(q, perturb), e2 = epsilon2_general(q);
  out.push_back(exact_entry(c + " eps1", "sign", e1, e1 < 0));
  out.push_back(exact_entry(c + " eps2", "sign", e2, e2 > 0));
  return out;
}

inline std::vector<VerifyEntry> verify_ladder_state(const FockState2D& s) {
  std::vector<VerifyEntry> out;
  const QuantumNumbers q = map_Nm_to_nl(s);
  const std::string c = s.to_string();
  agree_exact(out, c + " eps1", {{"closed-form", epsilon1_general(q)}, {"ladder", first_order_2d(s)}});
  agree_exact(out, c + " eps2", {{"closed-form", epsilon2_general(q)}, {"ladder", second_order_2d(s)}});
  return out;
}

inline std::vector<VerifyEntry> verify_oracle_state(const QuantumNumbers& q, int s_max) {
  std::vector<VerifyEntry> out;
  const std::string c = q.to_string();
  const std::vector<Rational> moments = radial_moment_sequence(q, 2 * s_max);
  for (int s = 0; s <= s_max; ++s) {
    const Rational& exact = moments[s];
    const Real quad = quad_expectation(q, s);
    out.push_back(real_entry(c + " <eta^" + std::to_string(s) + ">", "quadrature", quad,
                             within_relative(quad, to_real(exact), 1e-12)));
  }
  const Rational part2 = second_order_part2(q);
  const Real sos = sum_over_states_check(q, q.radial_index() + 4);
  out.push_back(real_entry(c + " eps2 part II", "sum-over-states", sos, within_relative(sos, to_real(part2), 1e-10)));
  const double etas[] = {0.25, 1.0, 2.5, 6.0};
  const Real res = radial_residual(q, etas);
  out.push_back(real_entry(c + " radial residual", "quadrature", res, res <= 1e-10));
  return out;
}

inline std::vector<VerifyEntry> verify_degeneracy(int N, int d) {
  BigInt sum = 0;
  for (int l : allowed_l(N)) sum += degeneracy_level(l, d);
  const BigInt total = degeneracy_total(N, d);
  const std::string c = "(d=" + std::to_string(d) + ", N=" + std::to_string(N) + ")";
  return {{c + " degeneracy", "sum-rule", total.str() + "/1", total.str(), sum == total},
          {c + " sub-levels", "split-count", std::to_string(split_count(N)) + "/1", std::to_string(split_count(N)),
           split_count(N) == static_cast<int>(allowed_l(N).size())}};
}

/// Runs tasks on a fixed pool; results keep task order.
inline std::vector<std::vector<VerifyEntry>> run_tasks(const std::vector<std::function<std::vector<VerifyEntry>()>>& tasks,
                                                       unsigned threads) {
  std::vector<std::vector<VerifyEntry>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyGrid& grid, const VerifyOptions& options = {}) {
  // Warm the shared operator caches before workers start.
  (void)detail::cached_p4();
  (void)detail::cached_p4_off_diagonal();
  (void)detail::cached_p6_diagonal();

  std::vector<std::function<std::vector<VerifyEntry>()>> tasks;
  const bool perturb = options.perturb;
  for (int N = 0; N <= grid.N1_max; ++N)
    tasks.emplace_back([N, perturb] { return detail::verify_radial_state(QuantumNumbers::one_dimensional(N), perturb); });
  for (int d = 2; d <= grid.d_max; ++d)
    for (int n = 0; n <= grid.nl_max; ++n)
      tasks.emplace_back([d, n, &grid, perturb] {
        std::vector<VerifyEntry> out;
        for (int l = 0; l <= grid.nl_max; ++l) {
          auto part = detail::verify_radial_state(QuantumNumbers::radial(d, n, l), perturb);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      });
  for (int N = 0; N <= grid.N2d_max; ++N)
    tasks.emplace_back([N] {
      std::vector<VerifyEntry> out;
      for (int m = -N; m <= N; m += 2) {
        auto part = detail::verify_ladder_state(FockState2D::make(N, m));
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    });
  for (int d : grid.oracle_dims)
    for (int n = 0; n <= grid.oracle_nl_max; ++n)
      for (int l = 0; l <= grid.oracle_nl_max; ++l)
        tasks.emplace_back([d, n, l, &grid] {
          return detail::verify_oracle_state(QuantumNumbers::radial(d, n, l), grid.oracle_s_max);
        });
  tasks.emplace_back([&grid] {
    std::vector<VerifyEntry> out;
    for (int d = 2; d <= grid.d_max; ++d)
      for (int N = 0; N <= grid.degeneracy_N_max; ++N) {
        auto part = detail::verify_degeneracy(N, d);
        out.insert(out.end(), part.begin(), part.end());
      }
    return out;
  });

  VerifyReport report{grid.name, perturb, {}};
  for (auto& chunk : detail::run_tasks(tasks, options.threads))
    report.entries.insert(report.entries.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  return report;
}

inline nlohmann::ordered_json to_json(const VerifyReport& report) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"case", e.case_id},
                       {"method", e.method},
                       {"value_pq", e.value_pq},
                       {"value_dec", e.value_dec},
                       {"status", e.pass ? "pass" : "fail"}});
  nlohmann::ordered_json out{{"grid", report.grid},
                             {"perturbed", report.perturbed},
                             {"working_digits", working_digits()},
                             {"checks", report.entries.size()},
                             {"failures", report.failure_count()},
                             {"status", report.passed() ? "pass" : "fail"}};
  if (const VerifyEntry* f = report.first_failure())
    out["first_failure"] = {{"case", f->case_id}, {"method", f->method}, {"value_pq", f->value_pq}};
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace salpeter
