#ifndef FSPLIT_SESSION_HPP
#define FSPLIT_SESSION_HPP

#include <string>
#include <vector>

#include "fsplit/covers.hpp"
#include "fsplit/fsig.hpp"

namespace fsplit {

// One record per executed command.  Machine and human renderings are built
// from the same fields, so their values always agree.
struct CommandRecord {
  std::string cmd;     // command echo
  std::string status;  // "ok" or "error"
  std::string result;
  std::string witness;      // optional
  int iterations = -1;      // optional (splitprime)
  double elapsed_ms = 0.0;  // excluded from the deterministic section
};

struct Report {
  std::vector<CommandRecord> records;
  bool had_error = false;

  std::string to_text() const;
  // Deterministic machine-readable rendering; timings live in a separate
  // section so the records section is byte-stable across runs.
  std::string to_json() const;
};

// Aborts with SessionError on file or declaration errors; command failures
// are recorded fail-soft.  Under strict, execution stops at the first failed
// command.
struct SessionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Report run_session_text(const std::string& text, bool strict = false);
Report run_session(const std::string& path, bool strict = false);

}  // namespace fsplit

#endif
