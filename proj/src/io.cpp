// Copyright 2026 The thins Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thins/io.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace thins {

namespace {

constexpr std::size_t kMaxCarrier = 64;

Carrier carrier_checked(const std::string& name, std::size_t size) {
  if (size > kMaxCarrier)
    throw ParseError("carrier '" + name + "' exceeds " +
                     std::to_string(kMaxCarrier) + " elements");
  return Carrier{name, size};
}

}  // namespace

nlohmann::json rel_to_json(const Rel& r) {
  const TypeSig& sig = r.sig();
  if (!sig.homogeneous() && sig.src.name() == sig.tgt.name())
    throw std::invalid_argument(
        "rel_to_json: distinct carriers share the name '" + sig.src.name() +
        "'");
  nlohmann::json carriers = nlohmann::json::object();
  carriers[sig.src.name()] = sig.src.size();
  carriers[sig.tgt.name()] = sig.tgt.size();
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : r.pairs())
    pairs.push_back(nlohmann::json::array({a, b}));
  return nlohmann::json{{"carriers", std::move(carriers)},
                        {"sig", {sig.src.name(), sig.tgt.name()}},
                        {"pairs", std::move(pairs)}};
}

Rel rel_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("relation: not a JSON object");
    const auto& carriers = j.at("carriers");
    const auto& sig_names = j.at("sig");
    if (!carriers.is_object()) throw ParseError("relation: carriers must be an object");
    if (!sig_names.is_array() || sig_names.size() != 2)
      throw ParseError("relation: sig must name two carriers");
    auto carrier_at = [&](std::size_t i) {
      std::string name = sig_names.at(i).get<std::string>();
      if (!carriers.contains(name))
        throw ParseError("relation: sig names unknown carrier '" + name + "'");
      const auto& size = carriers.at(name);
      if (!size.is_number_unsigned())
        throw ParseError("relation: carrier '" + name +
                         "' needs an unsigned size");
      return carrier_checked(name, size.get<std::size_t>());
    };
    Rel r{TypeSig{carrier_at(0), carrier_at(1)}};
    for (const auto& p : j.value("pairs", nlohmann::json::array())) {
      if (!p.is_array() || p.size() != 2 || !p.at(0).is_number_unsigned() ||
          !p.at(1).is_number_unsigned())
        throw ParseError("relation: each pair must be two unsigned indices");
      std::size_t a = p.at(0).get<std::size_t>();
      std::size_t b = p.at(1).get<std::size_t>();
      if (a >= r.rows() || b >= r.cols())
        throw ParseError("relation: pair (" + std::to_string(a) + "," +
                         std::to_string(b) + ") outside " + to_string(r.sig()));
      r.set(a, b);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("relation: ") + e.what());
  }
}

std::string rel_to_text(const Rel& r) {
  std::string out;
  for (std::size_t a = 0; a < r.rows(); ++a) {
    for (std::size_t b = 0; b < r.cols(); ++b)
      out += r.at(a, b) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Rel rel_from_text(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(std::move(line));
      line.clear();
    } else {
      line += ch;
    }
  }
  if (!line.empty()) lines.push_back(std::move(line));
  std::size_t rows = lines.size();
  std::size_t cols = rows == 0 ? 0 : lines[0].size();
  for (const std::string& l : lines) {
    if (l.size() != cols) throw ParseError("matrix: ragged rows");
    for (char ch : l)
      if (ch != '0' && ch != '1')
        throw ParseError(std::string("matrix: unexpected character '") + ch +
                         "'");
  }
  Carrier src = carrier_checked("A", rows);
  Carrier tgt = rows == cols ? src : carrier_checked("B", cols);
  Rel r{TypeSig{src, tgt}};
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b)
      if (lines[a][b] == '1') r.set(a, b);
  return r;
}

nlohmann::json model_to_json(const AbstractModel& m) {
  return nlohmann::json{{"names", m.names},     {"compose", m.compose},
                        {"converse", m.converse}, {"join", m.join},
                        {"meet", m.meet},       {"bot", m.bot},
                        {"id", m.id},           {"top", m.top}};
}

AbstractModel model_from_json(const nlohmann::json& j) {
  AbstractModel m;
  try {
    if (!j.is_object()) throw ParseError("model: not a JSON object");
    m.names = j.at("names").get<std::vector<std::string>>();
    m.compose = j.at("compose").get<std::vector<std::vector<std::size_t>>>();
    m.converse = j.at("converse").get<std::vector<std::size_t>>();
    m.join = j.at("join").get<std::vector<std::vector<std::size_t>>>();
    m.meet = j.at("meet").get<std::vector<std::vector<std::size_t>>>();
    m.bot = j.at("bot").get<std::size_t>();
    m.id = j.at("id").get<std::size_t>();
    m.top = j.at("top").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
  try {
    validate_tables(m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return m;
}

}  // namespace thins
