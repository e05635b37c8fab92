#include <fstream>
#include <iomanip>
#include <sstream>

#include "cornerindex/domains.hpp"
#include "cornerindex/errors.hpp"

namespace cornerindex::domains {

PolygonalDomain read_domain(std::istream& in, const std::string& default_name) {
  PolygonalDomain domain;
  domain.name = default_name;
  Loop* current = nullptr;
  bool have_outer = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "outer") {
      if (have_outer) throw ValidationError("line " + std::to_string(line_no) + ": second outer loop");
      have_outer = true;
      current = &domain.outer;
    } else if (first == "hole") {
      domain.holes.emplace_back();
      current = &domain.holes.back();
    } else if (first == "name") {
      std::string rest;
      std::getline(ls >> std::ws, rest);
      domain.name = rest;
    } else {
      if (current == nullptr)
        throw ValidationError("line " + std::to_string(line_no) + ": coordinates before a loop header");
      std::istringstream coords(line);
      Point2 p;
      std::string trailing;
      if (!(coords >> p.x >> p.y) || (coords >> trailing))
        throw ValidationError("line " + std::to_string(line_no) + ": expected `x y`");
      current->push_back(p);
    }
  }
  if (!have_outer) throw ValidationError("domain file has no outer loop");
  return domain;
}

PolygonalDomain read_domain_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open domain file " + path.string());
  return read_domain(in, path.stem().string());
}

void write_domain(std::ostream& out, const PolygonalDomain& domain) {
  const auto old_precision = out.precision();
  out << std::setprecision(17);
  if (!domain.name.empty()) out << "name " << domain.name << '\n';
  out << "outer\n";
  for (const auto& p : domain.outer) out << p.x << ' ' << p.y << '\n';
  for (const auto& hole : domain.holes) {
    out << "hole\n";
    for (const auto& p : hole) out << p.x << ' ' << p.y << '\n';
  }
  out.precision(old_precision);
}

}  // namespace cornerindex::domains
