#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homalg/structure_file.hpp"

namespace homalg {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

/// One check on one object. A failure carries the violated identity, the
/// basis-index tuple and the exact coordinates of both sides when known, or
/// a message when the check raised an error.
struct CheckRecord {
  std::string file;
  std::string object;
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string identity;
  std::vector<std::size_t> indices;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::string message;
  double seconds = 0;
};

struct Report {
  std::vector<CheckRecord> records;

  std::size_t count(CheckStatus s) const;
  /// True iff every record passes.
  bool ok() const;
  void append(const Report& other);
};

struct VerifyOptions {
  std::optional<std::string> object;
  std::optional<std::string> check;
  /// Stop at the first failing record.
  bool fail_fast = false;
  std::string file_label;
};

/// Names of the checks applicable to an object, in execution order.
std::vector<std::string> applicable_checks(const StructureFile& f, const StructureObject& o);

/// Runs every applicable check (or the selected ones) on every object (or
/// the selected one). A check whose prerequisite failed is skipped. With a
/// named check the prerequisites are not consulted. Throws
/// std::invalid_argument for unknown object or check names.
Report verify(const StructureFile& f, const VerifyOptions& options = {});

std::string render_text(const Report& r);
/// Machine-readable form: {"summary": {...}, "records": [...]}.
std::string render_json(const Report& r);

}  // namespace homalg
