/* Compares the OpenMP rref kernel against the serial reference on random
   matrices over both fields, then times one end-to-end homology workload.
   Results must agree exactly; a disagreement aborts with a nonzero exit. */

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "pathhom/digraph.hpp"
#include "pathhom/field.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/omega.hpp"

using namespace pathhom;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

template <class K>
Matrix<typename K::Elem> random_matrix(const K& k, std::size_t rows,
                                       std::size_t cols, std::uint64_t seed,
                                       double fill) {
  std::mt19937_64 eng(seed);
  Matrix<typename K::Elem> m(rows, cols, k.zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if ((eng() >> 11) * 0x1.0p-53 >= fill) continue;
      long v = static_cast<long>(eng() % 19) - 9;
      m.at(i, j) = k.from_int(v);
    }
  return m;
}

template <class K>
bool bench_field(const K& k, const char* label, std::size_t rows,
                 std::size_t cols, double fill) {
  auto m = random_matrix(k, rows, cols, 0xBE7C4 + rows, fill);
  RrefResult<K> par, ser;
  double t_par = time_ms([&] { par = rref(k, m, true); });
  double t_ser = time_ms([&] { ser = rref_serial(k, m); });
  bool agree = par.r == ser.r && par.pivots == ser.pivots;
  std::printf("  %-10s %4zu x %-4zu fill %.2f   parallel %8.1f ms   serial %8.1f ms   x%.2f   %s\n",
              label, rows, cols, fill, t_par, t_ser,
              t_par > 0 ? t_ser / t_par : 0.0, agree ? "agree" : "DISAGREE");
  return agree;
}

}  // namespace

int main() {
  std::printf("rref kernel, %d thread(s) available\n", omp_get_max_threads());

  bool ok = true;
  const PrimeField fp(1000003);
  ok &= bench_field(fp, "F_1000003", 300, 450, 0.30);
  ok &= bench_field(fp, "F_1000003", 600, 900, 0.15);
  const RationalField q;
  ok &= bench_field(q, "Q", 80, 120, 0.30);
  ok &= bench_field(q, "Q", 120, 180, 0.15);

  DiGraph pc = gen_punctured_cube();
  double t_h = time_ms([&] {
    auto t = homology(q, pc, 5, false);
    ok &= t.rows[2].dim_h == 1;
  });
  std::printf("  homology(punctured cube, cutoff 5) over Q: %.1f ms\n", t_h);

  if (!ok) {
    std::printf("bench: kernel disagreement detected\n");
    return 1;
  }
  return 0;
}
