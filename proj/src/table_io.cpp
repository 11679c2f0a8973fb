/*
   Copyright 2026 The genjac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "genjac/table_io.hpp"

#include <sstream>

#include <json.hpp>

#include "genjac/error.hpp"

namespace genjac {

namespace {

using nlohmann::json;

std::vector<Rational> plain_coeffs(const Poly& p) {
  return std::vector<Rational>(p.coeffs().begin(), p.coeffs().end());
}

}  // namespace

Basis parse_basis(const std::string& name) {
  if (name == "plain") return Basis::Plain;
  if (name == "shifted") return Basis::Shifted;
  throw Error(ErrorKind::Parse, "unknown basis '" + name + "'");
}

std::string to_string(Basis basis) { return basis == Basis::Plain ? "plain" : "shifted"; }

TableDocument make_table_document(const CoefficientTable& table, unsigned i_max, Basis basis) {
  if (basis == Basis::Shifted && table.family != Family::A && table.family != Family::B)
    throw Error(ErrorKind::Parse, "shifted basis is only defined for families a and b");
  TableDocument doc;
  doc.alpha = table.params.alpha;
  doc.beta = table.params.beta;
  doc.family = to_string(table.family);
  doc.i_max = i_max;
  doc.tool_version = GENJAC_VERSION;
  doc.basis = basis;
  for (const auto& [i, poly] : table.entries) {
    if (basis == Basis::Plain) {
      doc.entries.push_back({i, plain_coeffs(poly)});
    } else {
      const Rational center(table.family == Family::A ? -1 : 1);
      doc.entries.push_back({i, shifted_coeffs(poly, center)});
    }
  }
  return doc;
}

std::string to_json(const TableDocument& doc) {
  json entries = json::array();
  for (const auto& e : doc.entries) {
    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(c.to_string());
    entries.push_back({{"i", e.i}, {"coeffs", coeffs}});
  }
  json out = {{"meta",
               {{"alpha", doc.alpha.to_string()},
                {"beta", doc.beta.to_string()},
                {"family", doc.family},
                {"i_max", doc.i_max},
                {"tool_version", doc.tool_version},
                {"basis", to_string(doc.basis)}}},
              {"entries", entries}};
  return out.dump(2) + "\n";
}

TableDocument parse_json(const std::string& text) {
  try {
    const json in = json::parse(text);
    const json& meta = in.at("meta");
    TableDocument doc;
    doc.alpha = Rational::parse(meta.at("alpha").get<std::string>());
    doc.beta = Rational::parse(meta.at("beta").get<std::string>());
    doc.family = meta.at("family").get<std::string>();
    doc.i_max = meta.at("i_max").get<unsigned>();
    doc.tool_version = meta.at("tool_version").get<std::string>();
    doc.basis = parse_basis(meta.value("basis", std::string("plain")));
    for (const json& e : in.at("entries")) {
      TableDocument::Entry entry{e.at("i").get<unsigned>(), {}};
      for (const json& c : e.at("coeffs")) entry.coeffs.push_back(Rational::parse(c.get<std::string>()));
      doc.entries.push_back(std::move(entry));
    }
    return doc;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("malformed table document: ") + ex.what());
  }
}

std::string to_csv(const TableDocument& doc) {
  std::ostringstream os;
  os << "i,deg,coeff\n";
  for (const auto& e : doc.entries)
    for (std::size_t k = 0; k < e.coeffs.size(); ++k)
      os << e.i << ',' << k << ',' << e.coeffs[k].to_string() << '\n';
  return os.str();
}

std::vector<TableDocument::Entry> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "i,deg,coeff")
    throw Error(ErrorKind::Parse, "missing CSV header");
  std::vector<TableDocument::Entry> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw Error(ErrorKind::Parse, "malformed CSV row '" + line + "'");
    const unsigned i = static_cast<unsigned>(std::stoul(line.substr(0, c1)));
    const std::size_t deg = std::stoul(line.substr(c1 + 1, c2 - c1 - 1));
    if (out.empty() || out.back().i != i) out.push_back({i, {}});
    auto& coeffs = out.back().coeffs;
    if (deg != coeffs.size()) throw Error(ErrorKind::Parse, "CSV degrees out of order");
    coeffs.push_back(Rational::parse(line.substr(c2 + 1)));
  }
  return out;
}

}  // namespace genjac
