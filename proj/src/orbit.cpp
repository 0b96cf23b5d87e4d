#include "orbitkit/orbit.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "orbitkit/error.hpp"
#include "parallel.hpp"

namespace orbitkit {

namespace {

std::optional<std::size_t> env_size(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError(std::string(name) + " must be a non-negative integer, got '" + raw + "'");
  }
  return value;
}

void check_budget(const mpz_class& size, const ComputeLimits& limits, const char* what) {
  if (size > mpz_class(std::to_string(limits.max_points))) {
    throw SizeGuardError(std::string(what) + " would have " + size.get_str() + " points, over the limit of " +
                         std::to_string(limits.max_points));
  }
}

// Sweeps reflections over `nodes` until the predicate on the k-th coordinate
// no longer fires anywhere.
template <class Pred>
Point sweep(const CoxeterGroup& group, Point x, Pred fires) {
  group.require_point(x);
  // Each reflection moves x strictly up (or down) in the dominance order,
  // so the loop ends after at most |G| steps.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < group.rank(); ++k) {
      if (fires(x[static_cast<std::size_t>(k)].sign())) {
        group.reflect_in_place(k, x);
        changed = true;
        break;
      }
    }
  }
  return x;
}

}  // namespace

ComputeLimits ComputeLimits::from_environment() {
  ComputeLimits limits;
  if (auto v = env_size("ORBITKIT_MAX_POINTS")) limits.max_points = *v;
  if (auto v = env_size("ORBITKIT_THREADS")) limits.threads = static_cast<unsigned>(std::max<std::size_t>(1, *v));
  return limits;
}

Point dominant_representative(const CoxeterGroup& group, Point x) {
  return sweep(group, std::move(x), [](int s) { return s < 0; });
}

Point lowest_point(const CoxeterGroup& group, Point x) {
  return sweep(group, std::move(x), [](int s) { return s > 0; });
}

std::vector<int> zero_nodes(const Point& dominant) {
  std::vector<int> out;
  for (std::size_t k = 0; k < dominant.size(); ++k)
    if (dominant[k].is_zero()) out.push_back(static_cast<int>(k));
  return out;
}

mpz_class orbit_size(const CoxeterGroup& group, const Point& dominant) {
  if (dominant.size() != static_cast<std::size_t>(group.rank())) {
    throw DomainError("point dimension does not match the rank of " + group.name());
  }
  if (!dominant.is_dominant()) throw DomainError("orbit_size needs a dominant point, got (" + dominant.str() + ")");
  const auto zeros = zero_nodes(dominant);
  return group.order() / group.subdiagram_order(zeros);
}

Orbit::Orbit(GroupPtr group, Point dominant, std::vector<Point> points)
    : group_(std::move(group)), dominant_(std::move(dominant)), points_(std::move(points)) {}

bool Orbit::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

std::optional<std::size_t> Orbit::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(std::distance(points_.begin(), it));
}

Orbit generate_orbit(const CoxeterGroup& group, const Point& seed, const ComputeLimits& limits) {
  group.require_point(seed);
  Point dominant = dominant_representative(group, seed);
  const mpz_class expected = orbit_size(group, dominant);
  check_budget(expected, limits, "orbit");

  std::unordered_set<Point, PointHash> seen;
  seen.reserve(expected.get_ui());
  std::vector<Point> all{dominant};
  std::vector<Point> frontier{dominant};
  seen.insert(dominant);
  const int rank = group.rank();
  while (!frontier.empty()) {
    std::vector<std::vector<Point>> found(std::max(1U, limits.threads));
    detail::parallel_chunks(frontier.size(), limits.threads, [&](std::size_t begin, std::size_t end, unsigned w) {
      for (std::size_t i = begin; i < end; ++i) {
        const Point& p = frontier[i];
        for (int k = 0; k < rank; ++k) {
          if (p[static_cast<std::size_t>(k)].sign() <= 0) continue;
          Point q = group.reflect(k, p);
          if (!seen.count(q)) found[w].push_back(std::move(q));
        }
      }
    });
    std::vector<Point> next;
    for (auto& chunk : found) {
      for (auto& q : chunk) {
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  if (mpz_class(std::to_string(all.size())) != expected) {
    throw InternalError("orbit of (" + dominant.str() + ") has " + std::to_string(all.size()) +
                        " points, stabilizer formula gives " + expected.get_str());
  }
  std::sort(all.begin(), all.end());
  return Orbit(group.shared_from_this(), std::move(dominant), std::move(all));
}

std::vector<Point> reflection_closure(const CoxeterGroup& group, const Point& seed, std::span<const int> nodes,
                                      const ComputeLimits& limits) {
  group.require_point(seed);
  std::vector<int> gens(nodes.begin(), nodes.end());
  if (gens.empty()) {
    for (int k = 0; k < group.rank(); ++k) gens.push_back(k);
  }
  for (int k : gens) group.require_node(k);
  std::unordered_set<Point, PointHash> seen{seed};
  std::vector<Point> all{seed};
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (int k : gens) {
      Point q = group.reflect(k, all[head]);
      if (seen.insert(q).second) {
        all.push_back(std::move(q));
        if (all.size() > limits.max_points) {
          throw SizeGuardError("reflection closure exceeded the limit of " + std::to_string(limits.max_points) +
                               " points");
        }
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace orbitkit
