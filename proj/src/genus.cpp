#include "qpt/genus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qpt {

namespace {

// +-Gamma as a sorted encoding set; flags whether -I had to be adjoined.
std::vector<std::uint64_t> plus_minus(const SL2Part& gamma, bool* adjoined) {
  long long m = gamma.modulus;
  Mat2 mi = minus_identity(m);
  std::unordered_set<std::uint64_t> set(gamma.elements.begin(), gamma.elements.end());
  *adjoined = !set.count(mi.encode());
  if (*adjoined) {
    for (std::uint64_t c : gamma.elements) set.insert((Mat2::decode(c, m) * mi).encode());
  }
  std::vector<std::uint64_t> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct CosetAction {
  long long modulus;
  std::vector<std::uint64_t> reps;                       // one per coset
  std::unordered_map<std::uint64_t, int> elem_to_coset;  // all of SL2
};

CosetAction coset_action(const std::vector<std::uint64_t>& group, long long m) {
  CosetAction act;
  act.modulus = m;
  std::vector<Mat2> mats;
  mats.reserve(group.size());
  for (std::uint64_t c : group) mats.push_back(Mat2::decode(c, m));
  for (std::uint64_t code : sl2_elements(m)) {
    if (act.elem_to_coset.count(code)) continue;
    int id = static_cast<int>(act.reps.size());
    act.reps.push_back(code);
    Mat2 g = Mat2::decode(code, m);
    for (const Mat2& h : mats) act.elem_to_coset.emplace((h * g).encode(), id);
  }
  return act;
}

std::vector<int> permutation(const CosetAction& act, const Mat2& g) {
  std::vector<int> perm(act.reps.size());
  for (size_t i = 0; i < act.reps.size(); ++i)
    perm[i] = act.elem_to_coset.at((Mat2::decode(act.reps[i], act.modulus) * g).encode());
  return perm;
}

long long count_fixed(const std::vector<int>& perm) {
  long long k = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] == static_cast<int>(i)) ++k;
  return k;
}

long long count_orbits(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  long long orbits = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return orbits;
}

}  // namespace

CongruenceData congruence_data(const SL2Part& gamma) {
  long long m = gamma.modulus;
  CongruenceData data;
  data.sl2_level = gamma.level();
  std::vector<std::uint64_t> pm = plus_minus(gamma, &data.minus_identity_adjoined);
  CosetAction act = coset_action(pm, m);
  data.index_psl2 = static_cast<long long>(act.reps.size());

  Mat2 s(m, 0, -1, 1, 0), t(m, 1, 1, 0, 1);
  data.e2 = count_fixed(permutation(act, s));
  data.e3 = count_fixed(permutation(act, s * t));
  data.cusps = count_orbits(permutation(act, t));

  long long num = data.index_psl2 - 3 * data.e2 - 4 * data.e3 - 6 * data.cusps;
  if (num % 12 != 0 || 1 + num / 12 < 0)
    throw std::logic_error("congruence_data: genus formula gave a non-integer");
  data.genus = 1 + num / 12;
  return data;
}

NormalizerQuotient normalizer_quotient(const SL2Part& gamma) {
  long long m = gamma.modulus;
  bool adjoined;
  std::vector<std::uint64_t> pm = plus_minus(gamma, &adjoined);
  std::unordered_set<std::uint64_t> inside(pm.begin(), pm.end());
  std::vector<Mat2> mats;
  for (std::uint64_t c : pm) mats.push_back(Mat2::decode(c, m));

  std::vector<Mat2> normalizer;
  for (std::uint64_t code : sl2_elements(m)) {
    Mat2 g = Mat2::decode(code, m);
    Mat2 gi = g.inverse();
    bool ok = true;
    for (const Mat2& h : mats) {
      if (!inside.count((g * h * gi).encode())) {
        ok = false;
        break;
      }
    }
    if (ok) normalizer.push_back(g);
  }

  NormalizerQuotient q;
  q.quotient_order = static_cast<long long>(normalizer.size() / pm.size());
  std::unordered_set<std::uint64_t> coset_seen;
  for (const Mat2& g : normalizer) {
    if (coset_seen.count(g.encode())) continue;
    for (const Mat2& h : mats) coset_seen.insert((h * g).encode());
    long long ord = 1;
    Mat2 x = g;
    while (!inside.count(x.encode())) {
      x = x * g;
      ++ord;
    }
    q.element_orders.push_back(ord);
  }
  std::sort(q.element_orders.begin(), q.element_orders.end());
  return q;
}

long long level_bound(const SL2Part& gamma) {
  long long m = gamma.level();
  long long p = 0;
  if (m != 1 && !is_prime_power(m, &p))
    throw std::invalid_argument("level_bound: SL2 level must be a prime power");
  NormalizerQuotient q = normalizer_quotient(gamma);
  long long b = 1;
  for (long long ord : q.element_orders) {
    long long rest = ord;
    if (p != 0)
      while (rest % p == 0) rest /= p;
    if (rest == 1) b = std::lcm(b, ord);
  }
  long long bound = m * b;
  if (m % 4 == 2) bound *= 2;
  return bound;
}

}  // namespace qpt
