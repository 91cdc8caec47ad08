#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tqftkit/error.hpp"
#include "tqftkit/jobs.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) tqftkit::fail("ParseError", "cannot read job file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tqftkit: exact invariants of finite abelian gauge theories"};
  std::string jobfile;
  bool verify = false;
  int threads = 0;
  int indent = 2;
  app.add_option("jobfile", jobfile, "TOML job file, or - for stdin")->required();
  app.add_flag("--verify", verify, "re-run the cross-checks and fail loudly");
  app.add_option("--threads", threads, "worker threads (default: TQFTKIT_THREADS or all)");
  app.add_option("--json-indent", indent, "JSON indent width, -1 for compact");
  CLI11_PARSE(app, argc, argv);

  if (threads == 0) {
    if (const char* env = std::getenv("TQFTKIT_THREADS")) threads = std::atoi(env);
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    tqftkit::JobSpec job = tqftkit::parse_job(read_input(jobfile));
    tqftkit::JobOptions opts;
    opts.verify = verify;
    opts.parallel = threads != 1;
    opts.json_indent = indent;
    std::cout << tqftkit::run_job(job, opts) << "\n";
  } catch (const tqftkit::Error& e) {
    nlohmann::ordered_json err{{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return e.code() == "ParseError" || e.code() == "SchemaError" ? 1 : 2;
  }
  return 0;
}
