#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anclab/errors.hpp"
#include "anclab/intmath.hpp"
#include "anclab/interval.hpp"
#include "anclab/label.hpp"
#include "anclab/tree.hpp"

namespace anclab {

/// Derived constants of the approximation scheme for an n-node tree.
/// z plays the role of ceil(lg n), clamped to >= 1 so n = 1 is legal, and
/// the permitted interval lengths are S = {floor(2^(k/z)) : 0 <= k < 4z^2}.
struct SchemeParams {
  std::uint64_t n = 1;
  unsigned z = 1;          // max(ceil(lg n), 1)
  unsigned a_width = 2;    // z + 1
  unsigned k_width = 2;    // 2 + ceil(2 lg z) = ceil(lg(4 z^2))
  unsigned label_len = 4;  // z + ceil(2 lg z) + 3 = a_width + k_width

  static SchemeParams for_node_count(std::uint64_t n) {
    if (n == 0) throw EmptyInput("scheme parameters need at least one node");
    if (n > kMaxNodeCount) throw RangeExceeded("node count exceeds 2^62");
    SchemeParams p;
    p.n = n;
    p.z = clamped_ceil_lg(n);
    p.a_width = p.z + 1;
    p.k_width = 2 + ceil_2lg(p.z);
    p.label_len = p.a_width + p.k_width;
    return p;
  }

  std::uint64_t k_limit() const { return 4ull * z * z; }
};

/// Label size of the approximation scheme: z + ceil(2 lg z) + 3 bits.
inline unsigned new_label_bits(std::uint64_t n) {
  return SchemeParams::for_node_count(n).label_len;
}

/// Smallest k with 2^k >= m^z, i.e. k = ceil(z * lg m), computed exactly.
/// Valid inputs satisfy m <= 2n (hence k < 4z^2); a larger k means the
/// caller broke that contract.
inline unsigned k_of_m(std::uint64_t m, unsigned z) {
  if (m == 0) throw BadSpec("k_of_m requires m >= 1");
  if (z == 0) throw BadSpec("k_of_m requires z >= 1");
  const BigUint p = big_pow(m, z);
  const unsigned k = big_bit_length(p - 1);
  if (k >= 4ull * z * z)
    throw RangeExceeded("k = " + std::to_string(k) + " escapes [0, 4z^2) for m = " +
                        std::to_string(m) + ", z = " + std::to_string(z));
  return k;
}

/// floor(2^(k/z)): the unique s with s^z <= 2^k < (s+1)^z, found by binary
/// search over s in [2^(k/z rounded down), 2^(k/z rounded down) + 1).
/// Shared verbatim by encoder and decoder so both sides agree bit-exactly.
inline BigUint s_of_k(unsigned k, unsigned z) {
  if (z == 0) throw BadSpec("s_of_k requires z >= 1");
  if (k >= 4ull * z * z) throw RangeExceeded("s_of_k requires k < 4z^2");
  const unsigned q = k / z;
  const BigUint two_k = big_pow2(k);
  BigUint lo = big_pow2(q);      // lo^z = 2^(qz) <= 2^k
  BigUint hi = big_pow2(q + 1);  // hi^z = 2^((q+1)z) > 2^k
  while (hi - lo > 1) {
    const BigUint mid = (lo + hi) >> 1;
    if (big_pow(mid, z) <= two_k)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// The rounded-up interval length s in S for a true length m, plus its
/// exponent k. Guarantees m <= s and s^z < 2 m^z exactly.
struct RoundedLength {
  std::uint64_t s = 1;
  unsigned k = 0;
};

inline RoundedLength round_up_to_S(std::uint64_t m, unsigned z) {
  const unsigned k = k_of_m(m, z);
  const BigUint s = s_of_k(k, z);
  if (!fits_uint64(s)) throw Overflow("rounded length exceeds 64 bits");
  return {s.template convert_to<std::uint64_t>(), k};
}

/// b-choice of the approximation scheme: round the tight span m = a_bar - a + 1
/// up to the next length in S and set b = a + s - 1. When k_out is non-null,
/// k(u) is recorded there (the vector must already have one slot per node).
/// The s values are memoized per k inside the returned closure; the closure
/// is single-use state, so concurrent callers each build their own.
inline BChoice make_approx_b_choice(unsigned z, std::vector<unsigned>* k_out = nullptr) {
  auto s_by_k = std::make_shared<std::vector<std::uint64_t>>(4ull * z * z, 0);
  return [z, k_out, s_by_k](NodeId u, std::uint64_t a, std::uint64_t a_bar) {
    const std::uint64_t m = a_bar - a + 1;
    const unsigned k = k_of_m(m, z);
    std::uint64_t& s = (*s_by_k)[k];
    if (s == 0) {
      const BigUint s_big = s_of_k(k, z);
      if (!fits_uint64(s_big)) throw Overflow("rounded length exceeds 64 bits");
      s = s_big.template convert_to<std::uint64_t>();
    }
    if (k_out) (*k_out)[u] = k;
    return a + s - 1;
  };
}

/// Interval assignment of the approximation scheme plus the per-node
/// exponents k(u) and the child processing order that produced it.
struct KAnnotatedAssignment {
  IntervalAssignment ia;
  std::vector<unsigned> k;
  ProcessingOrder order;
};

/// Assignment of the approximation scheme: children in non-decreasing
/// subtree-size order (ties by id), b(u) = a(u) + s - 1 with s the rounded
/// span. Verifies a(u) <= 2n - 1 at every node instead of trusting it.
inline KAnnotatedAssignment assign_new(const RootedTree& tree) {
  const SchemeParams p = SchemeParams::for_node_count(tree.size());
  std::vector<unsigned> k(tree.size(), 0);
  AssignResult r = assign(tree, child_order::by_subtree_size, make_approx_b_choice(p.z, &k), 0);
  const std::uint64_t a_limit = 2 * tree.size() - 1;
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (r.ia.a[u] > a_limit)
      throw RangeExceeded("a(" + std::to_string(u) + ") = " + std::to_string(r.ia.a[u]) +
                          " exceeds 2n - 1 = " + std::to_string(a_limit));
  }
  return {std::move(r.ia), std::move(k), std::move(r.order)};
}

/// The two per-node growth invariants of the approximation scheme, checked
/// with exact big integers ((1+eps) = 2^(1/z) throughout):
///   (a_bar - a + 1)^z <= |T_u|^z * 2^floor(lg |T_u|)
///   (b_bar - a + 1)^z <= |T_u|^z * 2^(floor(lg |T_u|) + 1)
inline CheckResult check_new_invariants(const RootedTree& tree, const KAnnotatedAssignment& ka) {
  const SchemeParams p = SchemeParams::for_node_count(tree.size());
  const IntervalAssignment& ia = ka.ia;
  for (NodeId u = 0; u < tree.size(); ++u) {
    const std::uint64_t t = tree.subtree_size(u);
    const unsigned floor_lg_t = std::bit_width(t) - 1;
    const BigUint t_pow = big_pow(t, p.z);
    const std::uint64_t a_span = ia.a_bar[u] - ia.a[u] + 1;
    const std::uint64_t b_span = ia.b_bar[u] - ia.a[u] + 1;
    if (big_pow(a_span, p.z) > (t_pow << floor_lg_t))
      return check_fail("node " + std::to_string(u) + ": (a_bar - a + 1)^z exceeds |T_u|^z * 2^" +
                        std::to_string(floor_lg_t));
    if (big_pow(b_span, p.z) > (t_pow << (floor_lg_t + 1)))
      return check_fail("node " + std::to_string(u) + ": (b_bar - a + 1)^z exceeds |T_u|^z * 2^" +
                        std::to_string(floor_lg_t + 1));
    if (ka.k[u] >= p.k_limit())
      return check_fail("node " + std::to_string(u) + ": k = " + std::to_string(ka.k[u]) +
                        " outside [0, 4z^2)");
    const BigUint s = s_of_k(ka.k[u], p.z);
    if (s != BigUint(ia.b[u] - ia.a[u] + 1))
      return check_fail("node " + std::to_string(u) + ": stored k does not reproduce b - a + 1");
  }
  return check_pass();
}

/// Labels of the approximation scheme:
/// l(u) = pack(a(u), z + 1) . pack(k(u), 2 + ceil(2 lg z)).
inline std::vector<Label> encode_new(const RootedTree& tree) {
  const SchemeParams p = SchemeParams::for_node_count(tree.size());
  const KAnnotatedAssignment ka = assign_new(tree);
  std::vector<Label> labels;
  labels.reserve(tree.size());
  for (NodeId u = 0; u < tree.size(); ++u)
    labels.push_back(concat(pack(ka.ia.a[u], p.a_width), pack(ka.k[u], p.k_width)));
  return labels;
}

/// Inverts label_len = z + ceil(2 lg z) + 3. The map is strictly increasing
/// in z, so scanning the z values admitted by the n <= 2^62 cap is an exact
/// O(1) inversion.
inline unsigned recover_z(std::size_t label_len) {
  for (unsigned z = 1; z <= 62; ++z) {
    const std::size_t len = z + ceil_2lg(z) + 3;
    if (len == label_len) return z;
    if (len > label_len) break;
  }
  throw LabelFormat("no z yields label length " + std::to_string(label_len));
}

namespace detail {

inline std::uint64_t bits_value(std::string_view bits) {
  std::uint64_t v = 0;
  for (char c : bits) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

}  // namespace detail

/// Query of the approximation scheme. Recovers z from the label length,
/// reads a_u, k_u, a_v, and tests a_v in [a_u, a_u + s_u - 1] with
/// s_u = floor(2^(k_u/z)). The test runs without materializing s_u:
///   a_v - a_u < s_u  <=>  (a_v - a_u + 1)^z <= 2^(k_u),
/// and the power is only evaluated when bit-length bounds cannot decide.
inline bool decode_new(const Label& lu, const Label& lv) {
  if (lu.size() != lv.size())
    throw LabelFormat("labels differ in length: " + std::to_string(lu.size()) + " vs " +
                      std::to_string(lv.size()));
  const unsigned z = recover_z(lu.size());
  const unsigned a_width = z + 1;
  const std::string_view u_bits(lu.bits());
  const std::string_view v_bits(lv.bits());
  const std::uint64_t a_u = detail::bits_value(u_bits.substr(0, a_width));
  const std::uint64_t k_u = detail::bits_value(u_bits.substr(a_width));
  const std::uint64_t a_v = detail::bits_value(v_bits.substr(0, a_width));
  if (k_u >= 4ull * z * z)
    throw LabelFormat("k field value " + std::to_string(k_u) + " outside [0, 4z^2)");
  if (a_v < a_u) return false;
  const std::uint64_t d1 = a_v - a_u + 1;  // need d1 <= s_u
  const std::uint64_t w = std::bit_width(d1);
  if (static_cast<std::uint64_t>(z) * w <= k_u) return true;        // d1^z < 2^(zw) <= 2^k
  if (static_cast<std::uint64_t>(z) * (w - 1) > k_u) return false;  // d1^z >= 2^(z(w-1)) > 2^k
  return big_pow(d1, z) <= big_pow2(static_cast<unsigned>(k_u));
}

}  // namespace anclab
