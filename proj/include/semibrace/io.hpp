#ifndef SEMIBRACE_IO_HPP_
#define SEMIBRACE_IO_HPP_

#include <map>
#include <string>
#include <vector>

#include "semibrace/classes.hpp"
#include "semibrace/search.hpp"

namespace semibrace {

// Table file format:
//   # comment lines start with '#'
//   elements: <name> <name> ...
//   op <label>:          (label in {add, mul, diamond})
//   <n rows of n element names>
// Tables are written by name so files can be audited by eye.
struct TableFile {
  std::vector<std::string> names;
  std::map<std::string, std::vector<int>> ops;  // label -> n*n index table

  bool has(const std::string& label) const { return ops.count(label) > 0; }
};

Result<TableFile> parse_table_file(const std::string& text);
Result<TableFile> load_table_file(const std::string& path);
std::string emit_table_file(const TableFile& f);

Result<CayleyTable> table_from(const TableFile& f, const std::string& label);
TableFile table_file_from(const CayleyTable& add_or_single,
                          const std::string& label);

// Semilattice spec file format:
//   elements: <Y names...>
//   op meet:
//   <k rows of k names>
//   component <Y name>: <table file path, relative to this file>
//   hom <Y name> -> <Y name>:
//   <element> -> <element>     (one line per source element)
// Self-homs may be omitted; they default to the identity.
struct SemilatticeFileData {
  std::vector<std::string> y_names;
  std::vector<int> meet;
  std::map<std::string, std::string> component_paths;
  // (alpha, beta) -> list of (source element name, target element name)
  std::map<std::pair<std::string, std::string>,
           std::vector<std::pair<std::string, std::string>>>
      homs;
};

Result<SemilatticeFileData> parse_semilattice_file(const std::string& text);

// Loads the spec file and every referenced component brace.
Result<SemilatticeSpec> load_semilattice_spec(const std::string& path);

// Deterministic report renderings. Wall time is excluded so emitted
// reports are bitwise identical across runs and worker counts.
std::string report_summary(const EnumerationReport& r);
std::string report_tables(const EnumerationReport& r);
std::string report_json(const EnumerationReport& r);

std::string read_text_file(const std::string& path, bool* ok);

}  // namespace semibrace

#endif  // SEMIBRACE_IO_HPP_
