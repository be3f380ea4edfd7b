#include "qsh/report.hpp"

#include <sstream>

namespace qsh {

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title.empty()) os << "== " << title << " ==\n";
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.details.empty()) os << "  -- " << r.details;
    os << '\n';
  }
  os << results.size() - static_cast<std::size_t>(num_fail()) << '/' << results.size()
     << " checks passed\n";
  return os.str();
}

}  // namespace qsh
