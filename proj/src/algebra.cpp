#include "orbitkit/algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "orbitkit/error.hpp"
#include "parallel.hpp"

namespace orbitkit {

namespace {

using Counter = std::unordered_map<Point, std::int64_t, PointHash>;

void require_same_group(const Orbit& a, const Orbit& b) {
  if (a.group().spec() != b.group().spec()) {
    throw DomainError("orbits belong to different groups: " + a.group().name() + " and " + b.group().name());
  }
}

void check_budget(const mpz_class& count, const ComputeLimits& limits, const std::string& what) {
  if (count > mpz_class(std::to_string(limits.max_points))) {
    throw SizeGuardError(what + " needs " + count.get_str() + " sums, over the limit of " +
                         std::to_string(limits.max_points));
  }
}

mpz_class to_mpz(std::size_t n) { return mpz_class(std::to_string(n)); }

// x + y if the sum is dominant; stops at the first negative coordinate.
bool dominant_sum(const Point& x, const Point& y, Point& out) {
  const std::size_t n = x.size();
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = x[j];
    out[j] += y[j];
    if (out[j].sign() < 0) return false;
  }
  return true;
}

// Runs `visit(counter, worker)` on chunks of [0, count) and merges the
// per-worker counters. Addition commutes, so the result does not depend on
// the schedule.
template <class Visit>
Counter count_in_parallel(std::size_t count, unsigned threads, Visit&& visit) {
  const unsigned workers = std::max(1U, threads);
  std::vector<Counter> partial(workers);
  detail::parallel_chunks(count, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    visit(begin, end, partial[w]);
  });
  Counter total = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w)
    for (auto& [p, m] : partial[w]) total[p] += m;
  return total;
}

OrbitSum to_sum(const GroupPtr& group, const Counter& counts) {
  OrbitSum out(group);
  for (const auto& [p, m] : counts) out.add(p, m);
  return out;
}

SignedDecomposition signed_decompose(const Orbit& a, const std::vector<std::int8_t>* sa, const Orbit& b,
                                     const std::vector<std::int8_t>* sb, const ComputeLimits& limits) {
  require_same_group(a, b);
  check_budget(to_mpz(a.size()) * to_mpz(b.size()), limits, "signed product");
  const Basis basis = (sa == nullptr) == (sb == nullptr) ? Basis::C : Basis::S;
  const auto& pa = a.points();
  const auto& pb = b.points();
  Counter counts = count_in_parallel(pa.size(), limits.threads, [&](std::size_t begin, std::size_t end, Counter& c) {
    Point sum(pa.empty() ? 0 : pa[0].size());
    for (std::size_t i = begin; i < end; ++i) {
      const int si = sa ? (*sa)[i] : 1;
      for (std::size_t k = 0; k < pb.size(); ++k) {
        if (!dominant_sum(pa[i], pb[k], sum)) continue;
        c[sum] += si * (sb ? (*sb)[k] : 1);
      }
    }
  });
  OrbitSum terms(a.group_ptr());
  for (const auto& [p, m] : counts) {
    if (basis == Basis::S && !p.is_strictly_dominant()) {
      if (m != 0) {
        throw InternalError("signed product left a net coefficient " + std::to_string(m) + " on the wall point (" +
                            p.str() + ")");
      }
      continue;
    }
    terms.add(p, m);
  }
  return SignedDecomposition{basis, std::move(terms)};
}

}  // namespace

void OrbitSum::add(const Point& dominant, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  if (!dominant.is_dominant()) throw DomainError("orbit sum keys must be dominant, got (" + dominant.str() + ")");
  auto [it, inserted] = terms_.try_emplace(dominant, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t OrbitSum::multiplicity(const Point& dominant) const {
  auto it = terms_.find(dominant);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<OrbitSum::Term> OrbitSum::sorted_terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [p, m] : terms_) {
    out.push_back(Term{p, m, orbit_size(*group_, p), group_->scalar_product(p, p)});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    if (x.squared_radius != y.squared_radius) return x.squared_radius > y.squared_radius;
    return x.dominant > y.dominant;
  });
  return out;
}

mpz_class OrbitSum::weighted_size() const {
  mpz_class total = 0;
  for (const auto& [p, m] : terms_) total += mpz_class(std::to_string(m)) * orbit_size(*group_, p);
  return total;
}

std::string OrbitSum::str() const {
  std::string out;
  for (const auto& t : sorted_terms()) {
    if (!out.empty()) out += " + ";
    if (t.multiplicity != 1) out += std::to_string(t.multiplicity);
    out += "(" + t.dominant.str() + ")";
  }
  return out.empty() ? "0" : out;
}

OrbitSum orbit_product(const Orbit& a, const Orbit& b, const ComputeLimits& limits, ProductMethod method) {
  require_same_group(a, b);
  check_budget(to_mpz(a.size()) * to_mpz(b.size()), limits, "product");
  const auto& pa = a.points();
  const auto& pb = b.points();

  if (method == ProductMethod::direct) {
    Counter counts = count_in_parallel(pa.size(), limits.threads, [&](std::size_t begin, std::size_t end, Counter& c) {
      Point sum(a.dominant().size());
      for (std::size_t i = begin; i < end; ++i)
        for (const auto& q : pb)
          if (dominant_sum(pa[i], q, sum)) ++c[sum];
    });
    return to_sum(a.group_ptr(), counts);
  }

  // mult(d) = |G(λ)| · #{k : λ + μ_k ∈ G(d)} / |G(d)|
  const CoxeterGroup& group = a.group();
  Counter hits = count_in_parallel(pb.size(), limits.threads, [&](std::size_t begin, std::size_t end, Counter& c) {
    for (std::size_t k = begin; k < end; ++k) ++c[dominant_representative(group, a.dominant() + pb[k])];
  });
  OrbitSum out(a.group_ptr());
  const mpz_class outer = to_mpz(a.size());
  for (const auto& [d, count] : hits) {
    const mpz_class numerator = outer * mpz_class(std::to_string(count));
    const mpz_class size = orbit_size(group, d);
    if (numerator % size != 0) throw InternalError("orbit-stabilizer count is not divisible at (" + d.str() + ")");
    const mpz_class mult = numerator / size;
    out.add(d, std::stoll(mult.get_str()));
  }
  return out;
}

Component parse_component(std::string_view text) {
  if (text == "symm") return Component::symm;
  if (text == "anti") return Component::anti;
  if (text == "mixed") return Component::mixed;
  throw ParseError("unknown symmetry component '" + std::string(text) + "' (symm|anti|mixed)", 0);
}

std::string_view to_string(Component c) {
  switch (c) {
    case Component::symm: return "symm";
    case Component::anti: return "anti";
    case Component::mixed: return "mixed";
  }
  return "?";
}

mpz_class tuple_count(std::size_t n, int k, Component component) {
  const mpz_class N = to_mpz(n);
  if (k == 2) {
    if (component == Component::symm) return N * (N + 1) / 2;
    if (component == Component::anti) return N * (N - 1) / 2;
  } else if (k == 3) {
    if (component == Component::symm) return N * (N + 1) * (N + 2) / 6;
    if (component == Component::anti) return N * (N - 1) * (N - 2) / 6;
    return N * (N * N - 1) / 3;
  }
  throw DomainError("unsupported power " + std::to_string(k) + " with component " + std::string(to_string(component)));
}

OrbitSum symmetrized_power(const Orbit& a, int k, Component component, const ComputeLimits& limits) {
  if (k != 2 && k != 3) throw DomainError("symmetrized powers are implemented for k = 2 and k = 3 only");
  if (k == 2 && component == Component::mixed) throw DomainError("the mixed component exists only for k = 3");
  const auto& pts = a.points();
  const std::size_t n = pts.size();
  check_budget(tuple_count(n, k, component), limits, "symmetrized power");

  Counter counts = count_in_parallel(n, limits.threads, [&](std::size_t begin, std::size_t end, Counter& c) {
    Point sum(a.dominant().size());
    for (std::size_t p = begin; p < end; ++p) {
      // q ≤ p (symm) or q < p (anti, mixed's q ≤ p handled below)
      const std::size_t q_end = component == Component::anti ? p : p + 1;
      for (std::size_t q = 0; q < q_end; ++q) {
        if (k == 2) {
          if (dominant_sum(pts[p], pts[q], sum)) ++c[sum];
          continue;
        }
        const Point pair = pts[p] + pts[q];
        // s ≤ q (symm), s < q (anti), s < p (mixed)
        std::size_t s_end = 0;
        switch (component) {
          case Component::symm: s_end = q + 1; break;
          case Component::anti: s_end = q; break;
          case Component::mixed: s_end = p; break;
        }
        for (std::size_t s = 0; s < s_end; ++s)
          if (dominant_sum(pair, pts[s], sum)) ++c[sum];
      }
    }
  });
  return to_sum(a.group_ptr(), counts);
}

SignedOrbit::SignedOrbit(Orbit orbit) : orbit_(std::move(orbit)) {
  if (!orbit_.dominant().is_strictly_dominant()) {
    throw DomainError("S-orbits need a seed with all coordinates positive, got (" + orbit_.dominant().str() + ")");
  }
  const CoxeterGroup& group = orbit_.group();
  const auto& pts = orbit_.points();
  signs_.assign(pts.size(), 0);
  const std::size_t start = *orbit_.index_of(orbit_.dominant());
  signs_[start] = 1;
  std::vector<std::size_t> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t i = queue[head];
    for (int k = 0; k < group.rank(); ++k) {
      const auto j = orbit_.index_of(group.reflect(k, pts[i]));
      if (!j) throw InternalError("reflection left the orbit of (" + orbit_.dominant().str() + ")");
      if (signs_[*j] == 0) {
        signs_[*j] = static_cast<std::int8_t>(-signs_[i]);
        queue.push_back(*j);
      } else if (signs_[*j] != -signs_[i]) {
        throw InternalError("conflicting signs in the S-orbit of (" + orbit_.dominant().str() + ")");
      }
    }
  }
}

SignedDecomposition signed_product(const Orbit& a, const Orbit& b, const ComputeLimits& limits) {
  return signed_decompose(a, nullptr, b, nullptr, limits);
}

SignedDecomposition signed_product(const Orbit& a, const SignedOrbit& b, const ComputeLimits& limits) {
  return signed_decompose(a, nullptr, b.orbit(), &b.signs(), limits);
}

SignedDecomposition signed_product(const SignedOrbit& a, const Orbit& b, const ComputeLimits& limits) {
  return signed_decompose(a.orbit(), &a.signs(), b, nullptr, limits);
}

SignedDecomposition signed_product(const SignedOrbit& a, const SignedOrbit& b, const ComputeLimits& limits) {
  return signed_decompose(a.orbit(), &a.signs(), b.orbit(), &b.signs(), limits);
}

std::vector<Point> orbit_polynomial(const Orbit& a) { return a.points(); }

}  // namespace orbitkit
