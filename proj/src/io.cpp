#include "zetascan/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "zetascan/errors.hpp"

namespace zetascan {
namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

}  // namespace

ZeroTable read_zero_table(std::istream& in, const std::string& name) {
  std::vector<double> gammas;
  std::string line;
  long line_no = 0;
  double prev = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::size_t b = line.find_first_not_of(" \t\r");
    std::size_t e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    double v = 0.0;
    const auto* last = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), last, v);
    if (res.ec != std::errc{} || res.ptr != last)
      throw parse_error(name + ": line " + std::to_string(line_no) +
                        ": not a number: '" + tok + "'");
    if (!(v > 0.0))
      throw parse_error(name + ": line " + std::to_string(line_no) +
                        ": ordinate must be positive");
    if (v <= prev)
      throw parse_error(name + ": line " + std::to_string(line_no) +
                        ": ordinates must be strictly increasing");
    prev = v;
    gammas.push_back(v);
  }
  return make_zero_table(std::move(gammas));
}

ZeroTable read_zero_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw argument_error("cannot open zero table: " + path);
  return read_zero_table(in, path);
}

void write_zero_table(std::ostream& os, const std::vector<double>& gammas,
                      const std::string& header_comment) {
  if (!header_comment.empty()) {
    std::istringstream lines(header_comment);
    std::string l;
    while (std::getline(lines, l)) os << "# " << l << "\n";
  }
  for (double g : gammas) os << format_sig12(g) << "\n";
}

std::string format_sig12(double v) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_profile_csv(std::ostream& os, const ScanProfile& pr) {
  os << "xi,S,k,terms_used,error_bound\n";
  for (std::size_t i = 0; i < pr.xis.size(); ++i) {
    os << format_sig12(pr.xis[i]) << ',' << format_sig12(pr.values[i]) << ','
       << pr.ks[i] << ',' << pr.terms_used[i] << ','
       << format_sig12(pr.error_bounds[i]) << '\n';
  }
}

void write_candidates_csv(std::ostream& os,
                          const std::vector<ZeroCandidate>& candidates) {
  os << "location,mass,window_lo,window_hi\n";
  for (const auto& c : candidates) {
    os << format_sig12(c.location) << ',' << format_sig12(c.mass) << ','
       << format_sig12(c.window_lo) << ',' << format_sig12(c.window_hi)
       << '\n';
  }
}

}  // namespace zetascan
