#include "ooc/family_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ooc {

using nlohmann::json;

void write_family_header(std::ostream& out, const FamilyFileHeader& h) {
  const auto& r = h.requirement;
  out << json{{"format", "ooc-families"}, {"version", kFamilyFormatVersion},
              {"n", r.n}, {"w", r.omega}, {"la", r.lambda_a}, {"lc", r.lambda_c},
              {"c", h.c}, {"mode", h.mode}, {"equivalence", h.equivalence}}
             .dump()
      << '\n';
}

void write_family(std::ostream& out, const CodeFamily& family) {
  json codes = json::array();
  int n = 0;
  for (const auto& code : family.codes) {
    codes.push_back(code.to_bitstring());
    n = code.length();
  }
  if (family.codes.empty()) n = family.requirement.n;
  out << json{{"n", n}, {"c", family.codes.size()}, {"codes", std::move(codes)}}.dump() << '\n';
}

FamilyFile read_families(std::istream& in) {
  FamilyFile file;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [line_no](const std::string& why) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + why);
    };
    try {
      const auto obj = json::parse(line);
      if (!obj.is_object()) fail("expected a JSON object");
      if (obj.contains("format")) {
        if (obj.at("format") != "ooc-families") fail("unknown format");
        if (obj.at("version").get<int>() != kFamilyFormatVersion) fail("unsupported version");
        FamilyFileHeader h;
        h.requirement = Requirement{obj.at("n").get<int>(), obj.at("w").get<int>(),
                                    obj.at("la").get<int>(), obj.at("lc").get<int>()};
        h.c = obj.at("c").get<int>();
        h.mode = obj.value("mode", "paper");
        h.equivalence = obj.value("equivalence", "rotation");
        file.header = h;
        continue;
      }
      CodeFamily family;
      const int n = obj.at("n").get<int>();
      for (const auto& bits : obj.at("codes")) {
        const auto text = bits.get<std::string>();
        if (static_cast<int>(text.size()) != n) fail("bitstring length differs from n");
        family.codes.push_back(parse_bitstring(text));
      }
      if (obj.at("c").get<std::size_t>() != family.codes.size()) fail("c does not match code count");
      for (std::size_t i = 0; i < family.codes.size(); ++i) family.members.push_back(static_cast<int>(i));
      if (file.header) family.requirement = file.header->requirement;
      file.families.push_back(std::move(family));
    } catch (const json::exception& e) {
      fail(e.what());
    }
  }
  return file;
}

}  // namespace ooc
