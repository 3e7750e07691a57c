#pragma once

#include <cstddef>
#include <string>

namespace gencluster {

/// Output of a CLI subcommand. Exit codes: 0 success, 1 verification failure,
/// 2 input error (unreadable seed, bad word, invalid flag value).
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct MutateRequest {
  std::string seed_path;
  std::string word;  // 1-based letters
  int epsilon = +1;
  std::string format = "text";  // text | json
};

struct OrbitRequest {
  std::string seed_path;
  std::size_t max_depth = 4;
  std::string mode = "labeled";
  std::string format = "text";  // text | dot | csv | json
  int epsilon = +1;
  std::size_t threads = 1;
  std::size_t max_nodes = 20000;
};

struct FpolyRequest {
  std::string seed_path;
  std::string word;
  int epsilon = +1;
  std::string format = "text";  // text | csv
};

struct VerifyRequest {
  std::string seed_path;
  std::string suite = "all";
  std::size_t budget = 0;  // 0: per-suite default
  int epsilon = +1;
  std::string hat_y = "column";  // row is the deliberately wrong convention
};

CommandResult cmd_mutate(const MutateRequest& request);
CommandResult cmd_orbit(const OrbitRequest& request);
CommandResult cmd_fpoly(const FpolyRequest& request);
CommandResult cmd_verify(const VerifyRequest& request);

}  // namespace gencluster
