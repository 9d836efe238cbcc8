#include "umeb/lift.hpp"

#include "umeb/generators.hpp"
#include "umeb/matrix_core.hpp"

namespace umeb {

std::string to_string(LiftKind kind) {
  return kind == LiftKind::T1 ? "T1" : "T2";
}

std::optional<LiftKind> lift_kind_from_string(const std::string& s) {
  if (s == "T1" || s == "t1") return LiftKind::T1;
  if (s == "T2" || s == "t2") return LiftKind::T2;
  return std::nullopt;
}

long expected_member_count(LiftKind kind, const LiftParams& params,
                           int seed_size) {
  const long p = params.p, q = params.q, d = params.d, n = seed_size;
  if (kind == LiftKind::T1) return p * q * d * d - p * (d * d - n);
  return p * q * d * d - d * (p * q - n);
}

namespace {

std::string index_tag(const char* family, std::initializer_list<std::pair<const char*, int>> idx) {
  std::string tag = family;
  tag += ':';
  bool first = true;
  for (const auto& [name, value] : idx) {
    if (!first) tag += ',';
    first = false;
    tag += name;
    tag += '=';
    tag += std::to_string(value);
  }
  return tag;
}

}  // namespace

CandidateUMEB lift_square_seed(const SeedBasis& seed, int p, int q) {
  if (seed.kind != SeedKind::UUB) {
    throw ArgumentError("lift T1: seed kind " + to_string(seed.kind) +
                        " incompatible with T1 (requires a square UUB)");
  }
  if (p < 1 || q < 1 || p > q) {
    throw ArgumentError("lift T1: requires 1 <= p <= q, got p=" +
                        std::to_string(p) + ", q=" + std::to_string(q));
  }
  validate_seed(seed);
  const int d = seed.d_small;
  const int n_seed = seed.size();

  CandidateUMEB out;
  out.dA = static_cast<Index>(p) * d;
  out.dB = static_cast<Index>(q) * d;
  out.lift = LiftKind::T1;
  out.params = {p, q, d};
  out.seed_provenance = seed.provenance;
  out.degenerate = (p == 1 && q == 1);
  out.expected_count = expected_member_count(LiftKind::T1, out.params, n_seed);
  out.source = "T1 lift of " + seed.provenance + " (p=" + std::to_string(p) +
               ", q=" + std::to_string(q) + ", d=" + std::to_string(d) + ")" +
               (out.degenerate ? " [degenerate: seed passthrough]" : "");

  for (int k = 0; k < p; ++k) {
    const Matrix v = rect_clock_shift(p, q, k, 0);
    for (int j = 0; j < n_seed; ++j) {
      out.members.push_back(kron(v, seed.members[j]));
      out.tags.push_back(index_tag("C1", {{"k", k}, {"j", j}}));
    }
  }
  for (int k = 0; k < p; ++k) {
    for (int l = 1; l < q; ++l) {
      const Matrix v = rect_clock_shift(p, q, k, l);
      for (int n = 0; n < d; ++n) {
        for (int m = 0; m < d; ++m) {
          out.members.push_back(kron(v, clock_shift(d, n, m)));
          out.tags.push_back(
              index_tag("C2", {{"k", k}, {"l", l}, {"n", n}, {"m", m}}));
        }
      }
    }
  }
  return out;
}

CandidateUMEB lift_rect_seed(const SeedBasis& seed, int d) {
  // A square UUB is a valid USV1B with p = q, so both kinds lift.
  if (seed.kind != SeedKind::USV1B && seed.kind != SeedKind::UUB) {
    throw ArgumentError("lift T2: unsupported seed kind");
  }
  if (d < 1) {
    throw ArgumentError("lift T2: requires d >= 1, got d=" +
                        std::to_string(d));
  }
  validate_seed(seed);
  const int p = seed.d_small;
  const int q = seed.d_large;
  const int n_seed = seed.size();

  CandidateUMEB out;
  out.dA = static_cast<Index>(p) * d;
  out.dB = static_cast<Index>(q) * d;
  out.lift = LiftKind::T2;
  out.params = {p, q, d};
  out.seed_provenance = seed.provenance;
  out.degenerate = (d == 1);
  out.expected_count = expected_member_count(LiftKind::T2, out.params, n_seed);
  out.source = "T2 lift of " + seed.provenance + " (p=" + std::to_string(p) +
               ", q=" + std::to_string(q) + ", d=" + std::to_string(d) + ")" +
               (out.degenerate ? " [degenerate: seed passthrough]" : "");

  for (int n = 0; n < d; ++n) {
    const Matrix u = clock_shift(d, n, 0);
    for (int j = 0; j < n_seed; ++j) {
      out.members.push_back(kron(u, seed.members[j]));
      out.tags.push_back(index_tag("C1", {{"n", n}, {"j", j}}));
    }
  }
  for (int n = 0; n < d; ++n) {
    for (int m = 1; m < d; ++m) {
      const Matrix u = clock_shift(d, n, m);
      for (int k = 0; k < p; ++k) {
        for (int l = 0; l < q; ++l) {
          out.members.push_back(kron(u, rect_clock_shift(p, q, k, l)));
          out.tags.push_back(
              index_tag("C2", {{"n", n}, {"m", m}, {"k", k}, {"l", l}}));
        }
      }
    }
  }
  return out;
}

CandidateUMEB lift(LiftKind kind, const SeedBasis& seed,
                   const LiftParams& params) {
  if (kind == LiftKind::T1) return lift_square_seed(seed, params.p, params.q);
  return lift_rect_seed(seed, params.d);
}

}  // namespace umeb
