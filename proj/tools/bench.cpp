// Throughput benchmark: serial reference vs OpenMP enumeration of the
// same configuration range, checking that both produce identical reports.
#include "cosphere/report.hpp"

#include <chrono>
#include <iostream>

using namespace cosphere;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
  std::string catalog_path = argc > 1 ? argv[1] : "data/catalog.json";
  std::uint64_t limit = argc > 2 ? std::stoull(argv[2]) : 2048;
  int jobs = argc > 3 ? std::stoi(argv[3]) : 4;

  Catalog cat = Catalog::load(catalog_path);

  EnumerationOptions opt;
  opt.case_label = "A";
  opt.criterion = Criterion::kOptimal;
  opt.limit = limit;

  opt.jobs = 1;
  auto t0 = Clock::now();
  FrequencyReport serial = run_enumeration(opt, cat);
  auto t1 = Clock::now();
  double serial_s = std::chrono::duration<double>(t1 - t0).count();

  opt.jobs = jobs;
  t0 = Clock::now();
  FrequencyReport parallel = run_enumeration(opt, cat);
  t1 = Clock::now();
  double parallel_s = std::chrono::duration<double>(t1 - t0).count();

  bool identical = render_report(serial, cat) == render_report(parallel, cat);
  std::cout << "configs: " << serial.configs << '\n';
  std::cout << "serial:   " << serial_s << " s  ("
            << double(serial.configs) / serial_s << " configs/s)\n";
  std::cout << "parallel (" << jobs << " jobs): " << parallel_s << " s  ("
            << double(parallel.configs) / parallel_s << " configs/s)\n";
  std::cout << "speedup: " << serial_s / parallel_s << "x\n";
  std::cout << "reports identical: " << (identical ? "yes" : "NO") << '\n';
  return identical ? 0 : 1;
}
