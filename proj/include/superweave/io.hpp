// Copyright 2026 The superweave Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERWEAVE_IO_HPP_
#define SUPERWEAVE_IO_HPP_

// JSON documents for families and reports.
//
// Frame document:      {"dim": d, "field": "real" | "complex",
//                       "vectors": [[x, ...], ...]}   (complex: [re, im])
// Superframe document: {"components": [<frame document>, ...]}

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "superweave/frame.hpp"
#include "superweave/partition.hpp"
#include "superweave/weaving.hpp"

namespace superweave {

using Json = nlohmann::ordered_json;

/// Document parse or schema failure; what() names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const CVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(to_json(v[i]));
  return a;
}

inline bool is_real(const FrameFamily& f) {
  for (const CVector& v : f.vectors())
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (v[i].imag() != 0.0) return false;
  return true;
}

inline Json to_json(const FrameFamily& f) {
  const bool real = is_real(f);
  Json vectors = Json::array();
  for (const CVector& v : f.vectors()) {
    Json row = Json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (real) {
        row.push_back(v[i].real());
      } else {
        row.push_back(to_json(v[i]));
      }
    }
    vectors.push_back(std::move(row));
  }
  Json doc;
  doc["dim"] = f.dim();
  doc["field"] = real ? "real" : "complex";
  doc["vectors"] = std::move(vectors);
  return doc;
}

inline Json to_json(const SuperFrameFamily& s) {
  Json comps = Json::array();
  for (const FrameFamily& c : s.components()) comps.push_back(to_json(c));
  Json doc;
  doc["components"] = std::move(comps);
  return doc;
}

namespace detail {

inline double finite_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite value");
  return x;
}

inline const Json& field(const Json& doc, const char* key,
                         const std::string& where) {
  if (!doc.is_object()) throw ParseError(where + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end())
    throw ParseError(where + "." + key + ": missing field");
  return *it;
}

}  // namespace detail

inline FrameFamily frame_from_json(const Json& doc,
                                   const std::string& where = "$") {
  const Json& jdim = detail::field(doc, "dim", where);
  if (!jdim.is_number_integer() || jdim.get<long long>() < 1)
    throw ParseError(where + ".dim: expected a positive integer");
  const auto dim = jdim.get<std::size_t>();

  bool complex = false;
  if (auto it = doc.find("field"); it != doc.end()) {
    if (*it == "complex") {
      complex = true;
    } else if (*it != "real") {
      throw ParseError(where + ".field: expected \"real\" or \"complex\"");
    }
  }

  const Json& rows = detail::field(doc, "vectors", where);
  if (!rows.is_array() || rows.empty())
    throw ParseError(where + ".vectors: expected a non-empty array");
  std::vector<CVector> vectors;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string rw = where + ".vectors[" + std::to_string(k) + "]";
    const Json& row = rows[k];
    if (!row.is_array() || row.size() != dim)
      throw ParseError(rw + ": expected " + std::to_string(dim) + " entries");
    CVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string ew = rw + "[" + std::to_string(i) + "]";
      if (complex) {
        if (!row[i].is_array() || row[i].size() != 2)
          throw ParseError(ew + ": expected a [re, im] pair");
        v[i] = Complex(detail::finite_number(row[i][0], ew + "[0]"),
                       detail::finite_number(row[i][1], ew + "[1]"));
      } else {
        v[i] = detail::finite_number(row[i], ew);
      }
    }
    vectors.push_back(std::move(v));
  }
  return FrameFamily(dim, std::move(vectors));
}

inline bool is_super_document(const Json& doc) {
  return doc.is_object() && doc.contains("components");
}

inline SuperFrameFamily super_from_json(const Json& doc,
                                        const std::string& where = "$") {
  const Json& comps = detail::field(doc, "components", where);
  if (!comps.is_array() || comps.empty())
    throw ParseError(where + ".components: expected a non-empty array");
  std::vector<FrameFamily> out;
  for (std::size_t j = 0; j < comps.size(); ++j)
    out.push_back(
        frame_from_json(comps[j], where + ".components[" + std::to_string(j) + "]"));
  const std::size_t n = out.front().size();
  for (std::size_t j = 1; j < out.size(); ++j) {
    if (out[j].size() != n)
      throw ParseError(where + ".components[" + std::to_string(j) + "]: has " +
                       std::to_string(out[j].size()) + " vectors, expected " +
                       std::to_string(n));
  }
  return SuperFrameFamily(std::move(out));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open for writing");
  out << dump(j);
}

/// Superframe document, or a frame document read as a one-component superframe.
inline SuperFrameFamily load_super_file(const std::string& path) {
  const Json doc = read_json_file(path);
  if (is_super_document(doc)) return super_from_json(doc, path);
  return SuperFrameFamily({frame_from_json(doc, path)});
}

/// Frame document; a superframe document is read as its direct sum.
inline FrameFamily load_frame_file(const std::string& path) {
  const Json doc = read_json_file(path);
  if (is_super_document(doc)) return direct_sum(super_from_json(doc, path));
  return frame_from_json(doc, path);
}

inline Json to_json(const BoundsReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["is_frame"] = r.is_frame;
  j["is_tight"] = r.is_tight;
  j["is_riesz_sequence"] = r.is_riesz_sequence;
  j["is_riesz_basis"] = r.is_riesz_basis;
  j["tol"] = r.tol;
  return j;
}

/// 1-based indices per 1-based block number.
inline Json blocks_one_based(const PartitionAssignment& p) {
  Json j = Json::object();
  for (std::uint32_t b = 0; b < p.num_blocks(); ++b) {
    Json idx = Json::array();
    for (std::size_t k : p.indices_of(b)) idx.push_back(k + 1);
    j[std::to_string(b + 1)] = std::move(idx);
  }
  return j;
}

inline Json to_json(const WeavingReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["woven"] = r.woven();
  j["universal_lower"] = r.universal_lower;
  j["universal_upper"] = r.universal_upper;
  j["exhaustive"] = r.exhaustive;
  j["families"] = r.num_families;
  j["partitions_checked"] = r.partitions_checked;
  if (r.partitions_total) {
    j["partitions_total"] = *r.partitions_total;
  } else {
    j["partitions_total"] = nullptr;
  }
  j["free_indices"] = r.free_indices;
  j["partition_encoding"] =
      "character k is the 0-based family used at 0-based index k";
  j["worst_lower_partition"] = r.worst_lower_partition.to_string();
  j["worst_lower_blocks_1based"] = blocks_one_based(r.worst_lower_partition);
  j["worst_upper_partition"] = r.worst_upper_partition.to_string();
  if (r.witness_vector) {
    j["witness_vector"] = to_json(*r.witness_vector);
  } else {
    j["witness_vector"] = nullptr;
  }
  j["tol"] = r.tol;
  return j;
}

inline Json to_json(const SuperWeavingReport& r) {
  Json j = to_json(r.joint);
  Json comps = Json::array();
  for (const WeavingReport& c : r.components) comps.push_back(to_json(c));
  j["components"] = std::move(comps);
  return j;
}

}  // namespace superweave

#endif  // SUPERWEAVE_IO_HPP_
