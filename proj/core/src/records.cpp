#include "simplex_cover/records.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

namespace simplex_cover {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rationals_json(std::span<const Rational> values) {
  auto arr = ordered_json::array();
  for (const auto& c : values) arr.push_back(c.str());
  return arr;
}

ordered_json element_json(const CoverElement& e) {
  ordered_json j;
  j["kind"] = std::string(to_string(e.kind));
  j["v"] = e.v;
  j["pi"] = e.perm().one_based();
  j["anchor"] = rationals_json(e.anchor().coords());
  return j;
}

}  // namespace

std::string to_record(const CoverElement& element) { return element_json(element).dump(); }

CoverElement parse_record(std::string_view line, int n) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed cover record: ") + e.what());
  }
  try {
    const auto kind = parse_element_kind(j.at("kind").get<std::string>());
    auto v = j.at("v").get<LatticeVector>();
    const auto pi = j.at("pi").get<std::vector<int>>();
    std::vector<Rational> anchor;
    for (const auto& c : j.at("anchor")) anchor.push_back(Rational::parse(c.get<std::string>()));
    if (v.size() != pi.size() || v.size() != anchor.size()) {
      throw ParseError("cover record fields disagree on dimension");
    }

    auto perm = Permutation::from_one_based(pi);
    const Rational dl = delta(n);
    CoverElement rebuilt = kind == ElementKind::top
                               ? make_top_element(std::move(v), std::move(perm), dl)
                               : make_base_element(std::move(v), std::move(perm), dl);
    if (rebuilt.kind != kind || rebuilt.anchor() != Point(std::move(anchor))) {
      throw ParseError("cover record anchor does not match its kind: " + std::string(line));
    }
    return rebuilt;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cover record: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid cover record: ") + e.what());
  }
}

void write_cover(std::ostream& out, const CoverSpec& cover) {
  for (const auto& e : cover.elements()) out << to_record(e) << '\n';
}

CoverSpec read_cover(std::istream& in, int d, int n) {
  std::vector<CoverElement> elements;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    elements.push_back(parse_record(line, n));
  }
  return CoverSpec(d, n, std::move(elements));
}

std::string to_json(const WitnessResult& result) {
  ordered_json j;
  j["route"] = std::string(to_string(result.route));
  const auto element = element_json(result.element);
  for (const auto& [key, value] : element.items()) j[key] = value;
  j["w"] = rationals_json(result.w.coords());
  return j.dump();
}

}  // namespace simplex_cover
