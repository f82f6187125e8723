#ifndef PMSP_CLI_HPP_
#define PMSP_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "pmsp/graph.hpp"
#include "pmsp/graph_io.hpp"
#include "pmsp/verify.hpp"

namespace pmsp::cli {

// Exit code contract, stable for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsageOrPrecondition = 2;

enum class InputKind { kNone, kInlineEdgeList, kInlineGraph6, kFile, kStdin, kFamily };

struct RunConfig {
  std::string command;  // pms | hstar | verify
  InputKind input_kind = InputKind::kNone;
  std::string input;  // inline text, path, or family spec
  GraphFormat format = GraphFormat::kGraph6;
  bool json = false;
  bool show_trace = false;
  int oracle_limit = 18;
  int matching_limit = 24;
  int counting_limit = 14;
  std::string suite;
  int max_n = 0;  // 0 = suite default
  int trials = 200;
  std::uint64_t seed = 20240915;

  VerifyConfig verify_config() const;
};

// Family specs: path:n, cycle:n, caterpillar:n:k, kary:k:r,
// cycle-complement:n, dg:<graph6>.
Graph graph_from_family_spec(const std::string& spec);

// Resolves the configured input source to a graph.
Graph load_graph(const RunConfig& config, std::istream& in);

int cmd_pms(const RunConfig& config, std::istream& in, std::ostream& out,
            std::ostream& err);
int cmd_hstar(const RunConfig& config, std::istream& in, std::ostream& out,
              std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pmsp::cli

#endif  // PMSP_CLI_HPP_
