#pragma once

// Brute-force refutation of equations in a carrier. Validity is only ever
// reported relative to the carriers actually searched.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "polylift/axioms.hpp"
#include "polylift/error.hpp"
#include "polylift/eval.hpp"
#include "polylift/finite_algebra.hpp"
#include "polylift/term.hpp"

namespace polylift {

  inline constexpr std::uint64_t kDefaultBudget  = std::uint64_t{1} << 24;
  inline constexpr std::uint64_t kDefaultSamples = 1000;

  struct Strategy {
    enum class Kind { Exhaustive, Sampled };
    Kind          kind    = Kind::Exhaustive;
    std::uint64_t samples = kDefaultSamples;
    std::uint64_t seed    = 0;

    static Strategy exhaustive() { return {}; }
    static Strategy sampled(std::uint64_t n, std::uint64_t seed) {
      return {Kind::Sampled, n, seed};
    }
  };

  struct CheckOptions {
    Strategy      strategy = Strategy::exhaustive();
    std::uint64_t budget   = kDefaultBudget;
    unsigned      jobs     = 1;
  };

  template <class E>
  struct CheckResult {
    bool                         valid = true;
    std::vector<E>               witness;        // assignment x0, x1, ... when !valid
    std::uint64_t                witness_index = 0;
    std::uint64_t                tested        = 0;
    std::optional<E>             lhs_value;
    std::optional<E>             rhs_value;
  };

  /// splitmix64 finalizer; used to derive per-sample seeds.
  inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  /// card^vars, or nullopt when it exceeds limit.
  inline std::optional<std::uint64_t> bounded_power(std::uint64_t card, int vars,
                                                    std::uint64_t limit) {
    std::uint64_t p = 1;
    for (int k = 0; k < vars; ++k) {
      if (card != 0 && p > limit / card) {
        return std::nullopt;
      }
      p *= card;
    }
    return p <= limit ? std::optional(p) : std::nullopt;
  }

  namespace detail {

    template <Carrier C>
    void assignment_at(C const& carrier, std::uint64_t index, int vars,
                       std::vector<typename C::Element>& out) {
      auto const card = carrier.cardinality();
      out.clear();
      for (int v = 0; v < vars; ++v) {
        out.push_back(carrier.element(index % card));
        index /= card;
      }
    }

    template <Carrier C>
    void sample_at(C const& carrier, std::uint64_t seed, std::uint64_t t, int vars,
                   std::vector<typename C::Element>& out) {
      std::mt19937_64 rng(mix_seed(seed ^ mix_seed(t)));
      out.clear();
      for (int v = 0; v < vars; ++v) {
        out.push_back(carrier.random_element(rng));
      }
    }

  }  // namespace detail

  /// Searches assignments in index order (exhaustive) or sample order; the
  /// reported witness is always the lowest failing index regardless of jobs.
  template <Carrier C>
  CheckResult<typename C::Element> check_equation(Equation const& eq, C const& carrier,
                                                  CheckOptions const& opt = {}) {
    using E        = typename C::Element;
    int const vars = num_vars(eq);
    check_dimension(eq.lhs, carrier_dim(carrier));
    check_dimension(eq.rhs, carrier_dim(carrier));

    std::uint64_t total = 0;
    bool const    exhaustive = opt.strategy.kind == Strategy::Kind::Exhaustive;
    if (exhaustive) {
      auto const n = bounded_power(carrier.cardinality(), vars, opt.budget);
      if (!n) {
        throw BudgetExceeded("exhaustive search needs more than " + std::to_string(opt.budget)
                             + " assignments");
      }
      total = *n;
    } else {
      total = opt.strategy.samples;
    }

    auto fill = [&](std::uint64_t t, std::vector<E>& out) {
      if (exhaustive) {
        detail::assignment_at(carrier, t, vars, out);
      } else {
        detail::sample_at(carrier, opt.strategy.seed, t, vars, out);
      }
    };

    constexpr auto             kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{kNone};
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<E> a;
      for (std::uint64_t t = lo; t < hi; ++t) {
        if (t > best.load(std::memory_order_relaxed)) {
          return;
        }
        fill(t, a);
        if (!(eval_term<C>(eq.lhs, a, carrier) == eval_term<C>(eq.rhs, a, carrier))) {
          auto cur = best.load();
          while (t < cur && !best.compare_exchange_weak(cur, t)) {
          }
          return;
        }
      }
    };

    unsigned const jobs = std::max(1u, std::min<unsigned>(opt.jobs, 64));
    if (jobs == 1 || total < 2 * jobs) {
      scan(0, total);
    } else {
      std::vector<std::thread> pool;
      std::uint64_t const      chunk = (total + jobs - 1) / jobs;
      for (unsigned k = 0; k < jobs; ++k) {
        std::uint64_t const lo = std::min(total, k * chunk);
        std::uint64_t const hi = std::min(total, lo + chunk);
        pool.emplace_back(scan, lo, hi);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    CheckResult<E> r;
    if (best.load() == kNone) {
      r.tested = total;
      return r;
    }
    r.valid         = false;
    r.witness_index = best.load();
    r.tested        = r.witness_index + 1;
    fill(r.witness_index, r.witness);
    r.lhs_value = eval_term<C>(eq.lhs, r.witness, carrier);
    r.rhs_value = eval_term<C>(eq.rhs, r.witness, carrier);
    return r;
  }

  template <Carrier C>
  struct InstanceResult {
    LabeledEquation                  instance;
    CheckResult<typename C::Element> result;
  };

  template <Carrier C>
  std::vector<InstanceResult<C>> check_instances(std::vector<LabeledEquation> const& instances,
                                                 C const& carrier, CheckOptions const& opt = {}) {
    std::vector<InstanceResult<C>> out;
    out.reserve(instances.size());
    for (auto const& inst : instances) {
      out.push_back({inst, check_equation(inst.eq, carrier, opt)});
    }
    return out;
  }

  struct FpaViolation {
    std::string      label;
    std::vector<int> witness;
    int              lhs = 0;
    int              rhs = 0;
  };

  /// All F0-F9 instances that fail in a, each with its lowest witness.
  std::vector<FpaViolation> check_is_fpa(FiniteAlgebra const& a,
                                         std::uint64_t       budget = kDefaultBudget);

}  // namespace polylift
