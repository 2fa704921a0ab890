// Copyright 2026 The Authors.
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

#include "quickest/instance_io.h"

#include <string>

#include "nlohmann/json.hpp"
#include "quickest/errors.h"

namespace quickest {
namespace {

using Json = nlohmann::ordered_json;

Rat RatField(const Json& object, const char* key, const std::string& where) {
  const std::string field = where + "." + key;
  if (!object.contains(key)) throw InputError(field + ": missing");
  const Json& value = object.at(key);
  if (value.is_number_integer()) {
    return value.is_number_unsigned()
               ? ParseRat(std::to_string(value.get<std::uint64_t>()))
               : ParseRat(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    try {
      return ParseRat(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  throw InputError(field + ": expected an integer or a \"p/q\" string");
}

int IntField(const Json& object, const char* key, const std::string& where) {
  const std::string field = where + "." + key;
  if (!object.contains(key)) throw InputError(field + ": missing");
  const Json& value = object.at(key);
  if (!value.is_number_integer()) throw InputError(field + ": expected integer");
  const std::int64_t v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw InputError(field + ": out of range");
  }
  return static_cast<int>(v);
}

const Json& ArrayField(const Json& object, const char* key) {
  if (!object.contains(key) || !object.at(key).is_array()) {
    throw InputError(std::string(key) + ": expected an array");
  }
  return object.at(key);
}

Json RatJson(const Rat& value) {
  if (IsIntegral(value) && value.get_num().fits_slong_p()) {
    return Json(static_cast<std::int64_t>(value.get_num().get_si()));
  }
  return Json(ToString(value));
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) throw InputError("document: expected an object");

  Instance instance;
  FlowNetwork& network = instance.network;
  network.node_count = IntField(doc, "nodes", "document");

  const Json& arcs = ArrayField(doc, "arcs");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "arcs[" + std::to_string(i) + "]";
    const Json& a = arcs[i];
    if (!a.is_object()) throw InputError(where + ": expected an object");
    network.arcs.push_back({IntField(a, "tail", where),
                            IntField(a, "head", where),
                            RatField(a, "capacity", where),
                            RatField(a, "transit", where)});
  }

  std::vector<Rat> demands;
  const Json& sources = ArrayField(doc, "sources");
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::string where = "sources[" + std::to_string(i) + "]";
    if (!sources[i].is_object()) throw InputError(where + ": expected an object");
    network.sources.push_back(IntField(sources[i], "node", where));
    instance.supply.values.push_back(RatField(sources[i], "supply", where));
  }
  const Json& sinks = ArrayField(doc, "sinks");
  for (std::size_t i = 0; i < sinks.size(); ++i) {
    const std::string where = "sinks[" + std::to_string(i) + "]";
    if (!sinks[i].is_object()) throw InputError(where + ": expected an object");
    network.sinks.push_back(IntField(sinks[i], "node", where));
    instance.supply.values.push_back(RatField(sinks[i], "demand", where));
  }

  const std::vector<std::string> violations = ValidateInstance(instance);
  if (!violations.empty()) {
    std::string message = "invalid instance:";
    for (const std::string& v : violations) message += " " + v + ";";
    throw InputError(message);
  }
  return instance;
}

std::string SerializeInstance(const Instance& instance) {
  const FlowNetwork& network = instance.network;
  Json doc;
  doc["nodes"] = network.node_count;
  doc["arcs"] = Json::array();
  for (const Arc& arc : network.arcs) {
    Json a;
    a["tail"] = arc.tail;
    a["head"] = arc.head;
    a["capacity"] = RatJson(arc.capacity);
    a["transit"] = RatJson(arc.transit);
    doc["arcs"].push_back(std::move(a));
  }
  doc["sources"] = Json::array();
  doc["sinks"] = Json::array();
  for (int i = 0; i < network.terminal_count(); ++i) {
    Json t;
    t["node"] = network.terminal_node(i);
    if (network.is_source_terminal(i)) {
      t["supply"] = RatJson(instance.supply.values[i]);
      doc["sources"].push_back(std::move(t));
    } else {
      t["demand"] = RatJson(instance.supply.values[i]);
      doc["sinks"].push_back(std::move(t));
    }
  }
  return doc.dump(2) + "\n";
}

std::string SerializeFlow(const FlowNetwork& network,
                          const FlowOverTime& flow) {
  Json doc;
  doc["horizon"] = ToString(flow.horizon);
  doc["arcs"] = Json::array();
  for (ArcIndex a = 0; a < static_cast<ArcIndex>(flow.arcs.size()); ++a) {
    Json arc;
    arc["arc"] = a;
    arc["tail"] = network.arcs[a].tail;
    arc["head"] = network.arcs[a].head;
    arc["pieces"] = Json::array();
    for (const RatePiece& piece : flow.arcs[a].pieces) {
      arc["pieces"].push_back(
          Json{{"time", ToString(piece.time)}, {"rate", ToString(piece.rate)}});
    }
    doc["arcs"].push_back(std::move(arc));
  }
  return doc.dump(2) + "\n";
}

FlowOverTime ParseFlow(std::string_view text, const FlowNetwork& network) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) throw InputError("document: expected an object");
  FlowOverTime flow;
  flow.horizon = RatField(doc, "horizon", "document");
  flow.arcs.resize(network.arc_count());
  const Json& arcs = ArrayField(doc, "arcs");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "arcs[" + std::to_string(i) + "]";
    const int a = IntField(arcs[i], "arc", where);
    if (a < 0 || a >= network.arc_count()) {
      throw InputError(where + ".arc: no such arc");
    }
    const Json& pieces = ArrayField(arcs[i], "pieces");
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      const std::string piece_where = where + ".pieces[" + std::to_string(j) + "]";
      flow.arcs[a].pieces.push_back({RatField(pieces[j], "time", piece_where),
                                     RatField(pieces[j], "rate", piece_where)});
    }
  }
  return flow;
}

}  // namespace quickest
