// Compares the serial reference kernels against the OpenMP ones on the
// heaviest catalog model and prints wall times plus an equality check, so a
// regression in either engine is visible from the numbers alone.

#include <chrono>
#include <iostream>
#include <string>

#include "lgm/catalog.hpp"
#include "lgm/laurent.hpp"
#include "lgm/wci.hpp"

using namespace lgm;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string spec = argc > 1 ? argv[1] : "covering:3,2";
  int terms = argc > 2 ? std::stoi(argv[2]) : 6;

  auto ref = catalog::parse_model_spec(spec);
  auto ps = wci::find_nef_partitions(ref.model);
  auto f = wci::givental_polynomial(ref.model, ps.at(0));
  std::cout << "model " << spec << ", " << terms << " terms\n";

  auto t0 = Clock::now();
  auto naive = laurent::period_sequence(f, terms, laurent::Engine::naive);
  double naive_ms = ms_since(t0);

  t0 = Clock::now();
  auto pruned = laurent::period_sequence(f, terms, laurent::Engine::pruned);
  double pruned_ms = ms_since(t0);

  std::cout << "naive  " << naive_ms << " ms\n";
  std::cout << "pruned " << pruned_ms << " ms\n";
  std::cout << "sequences match: " << (naive == pruned ? "yes" : "NO") << "\n";

  // Raw product kernels on the largest intermediate power.
  auto big = laurent::pow(f, terms - 1);
  t0 = Clock::now();
  auto serial = laurent::multiply_serial(big, f);
  double serial_ms = ms_since(t0);

  t0 = Clock::now();
  auto parallel = laurent::multiply_parallel(big, f);
  double parallel_ms = ms_since(t0);

  std::cout << "multiply_serial   " << serial_ms << " ms ("
            << serial.terms().size() << " terms)\n";
  std::cout << "multiply_parallel " << parallel_ms << " ms\n";
  std::cout << "products match: " << (serial == parallel ? "yes" : "NO")
            << "\n";

  bool ok = naive == pruned && serial == parallel;
  if (!ok) return 1;
  return 0;
}
