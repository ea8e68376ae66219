#include "kgon/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "kgon/geometry.hpp"

namespace kgon {

namespace {

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("number of disks must be at least 1");
}

void require_k(int k) {
  if (k < 3) throw std::invalid_argument("polygon needs at least 3 sides");
}

}  // namespace

int ceil_term(int n) {
  require_n(n);
  const long long target = 12LL * n - 3;
  auto root = static_cast<long long>(std::sqrt(static_cast<double>(target)));
  while (root * root < target) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= target) --root;
  return static_cast<int>(root - 3);
}

double wegner_bound(int n) {
  return 2.0 * kSqrt3 * (n - 1) + (2.0 - kSqrt3) * ceil_term(n) + kPi;
}

double kgon_bound(int n, int k) {
  require_k(k);
  return 2.0 * kSqrt3 * (n - 1) + (2.0 - kSqrt3) * ceil_term(n) + k * std::tan(kPi / k);
}

bool is_centered_hexagonal(int n) {
  for (int m = 1; 3 * m * (m - 1) + 1 <= n; ++m)
    if (3 * m * (m - 1) + 1 == n) return true;
  return false;
}

std::string_view to_string(Tightness t) {
  switch (t) {
    case Tightness::TightSingle: return "Tight_Single";
    case Tightness::TightA: return "Tight_A";
    case Tightness::TightB: return "Tight_B";
    case Tightness::TightC: return "Tight_C";
    case Tightness::TightCenteredHex: return "Tight_CenteredHex";
    case Tightness::NotTightKnown: return "NotTightKnown";
    case Tightness::Unknown: return "Unknown";
  }
  return "Unknown";
}

Tightness tightness(int n, int k) {
  require_n(n);
  require_k(k);
  if (n == 1) return Tightness::TightSingle;
  if (n == 2) return k % 2 == 0 ? Tightness::TightA : Tightness::NotTightKnown;
  if ((n == 3 || n == 6) && k % 3 == 0) return Tightness::TightB;
  if (k == 6 && is_centered_hexagonal(n)) return Tightness::TightCenteredHex;
  // Every n <= 120 admits a Wegner packing.
  if (k % 6 == 0 && n <= 120) return Tightness::TightC;
  if (n == 3 && k == 4) return Tightness::NotTightKnown;
  return Tightness::Unknown;
}

BoundReport bound_report(int n, int k) {
  return {n, k, ceil_term(n), wegner_bound(n), kgon_bound(n, k), tightness(n, k)};
}

}  // namespace kgon
