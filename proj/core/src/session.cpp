// Copyright 2026 The frobx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "frobx/session.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) throw SchemaError("unknown key \"" + key + "\" in " + where);
  }
}

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!head(name.front())) return false;
  for (char c : name.substr(1)) {
    if (!head(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

}  // namespace

const IdealHandle& Session::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw MathError("no ideal named \"" + name + "\" in the session");
  return it->second;
}

Session parse_session_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("session is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("session must be a JSON object");
  reject_unknown_keys(root, {"ring", "ideals"}, "session");
  if (!root.contains("ring") || !root["ring"].is_object()) {
    throw SchemaError("session needs a \"ring\" object");
  }
  const json& ring = root["ring"];
  reject_unknown_keys(ring, {"p", "vars", "relations"}, "ring");
  if (!ring.contains("p") || !ring["p"].is_number_integer()) {
    throw SchemaError("ring.p must be an integer");
  }
  if (!ring.contains("vars") || !ring["vars"].is_array() || ring["vars"].empty()) {
    throw SchemaError("ring.vars must be a nonempty string array");
  }
  std::vector<std::string> vars;
  for (const auto& v : ring["vars"]) {
    if (!v.is_string()) throw SchemaError("ring.vars must be a nonempty string array");
    std::string name = v.get<std::string>();
    if (!name.empty() && name.front() == '@') {
      throw SchemaError("variable name \"" + name + "\" is reserved");
    }
    vars.push_back(std::move(name));
  }

  std::int64_t p = ring["p"].get<std::int64_t>();
  RingPtr ambient;
  try {
    ambient = make_ring(p < 0 ? 0 : static_cast<std::uint64_t>(p), std::move(vars));
  } catch (const MathError& e) {
    throw SchemaError(std::string("invalid ring: ") + e.what());
  }

  std::vector<Polynomial> relations;
  if (ring.contains("relations")) {
    if (!ring["relations"].is_array()) throw SchemaError("ring.relations must be an array");
    for (const auto& r : ring["relations"]) {
      if (!r.is_string()) throw SchemaError("ring.relations must contain strings");
      try {
        relations.push_back(parse_polynomial(r.get<std::string>(), ambient));
      } catch (const ParseError& e) {
        throw ParseError(std::string("relation \"") + r.get<std::string>() + "\": " + e.what());
      }
    }
  }

  Session session;
  session.presentation = make_presentation(ambient, std::move(relations));
  if (root.contains("ideals")) {
    if (!root["ideals"].is_object()) throw SchemaError("\"ideals\" must be an object");
    for (const auto& [name, gens] : root["ideals"].items()) {
      if (!is_identifier(name)) {
        throw SchemaError("ideal name \"" + name + "\" is not an identifier");
      }
      if (!gens.is_array()) {
        throw SchemaError("ideal \"" + name + "\" must be a string array");
      }
      std::vector<Polynomial> polys;
      for (const auto& g : gens) {
        if (!g.is_string()) throw SchemaError("ideal \"" + name + "\" must be a string array");
        try {
          polys.push_back(parse_polynomial(g.get<std::string>(), ambient));
        } catch (const ParseError& e) {
          throw ParseError("ideal \"" + name + "\", generator \"" + g.get<std::string>() +
                           "\": " + e.what());
        }
      }
      session.ideals.emplace(name, IdealHandle(session.presentation, std::move(polys)));
      session.ideal_names.push_back(name);
    }
  }
  return session;
}

Session load_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open session file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read session file \"" + path + "\"");
  return parse_session_text(buffer.str());
}

}  // namespace frobx
