/*
   Copyright 2026 the liecoh authors

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

#include "liecoh/rep_io.hpp"

#include <fstream>

#include "liecoh/padic.hpp"

namespace liecoh {

namespace {

Rat rat_from_json(const Json& j, const std::string& path) {
    try {
        if (j.is_string()) return rat_parse(j.get<std::string>());
        if (j.is_number_integer()) return Rat(j.get<long long>());
    } catch (const std::exception& e) {
        throw ParseError(path, e.what());
    }
    throw ParseError(path, "expected a rational as \"num/den\" string or integer");
}

}  // namespace

Json rep_to_json(const LieRep& rep, const std::string& label) {
    Json j;
    j["d"] = rep.d();
    j["dim"] = rep.dim();
    Json mats = Json::array();
    for (int i = 0; i <= rep.d(); ++i) mats.push_back(mat_to_json(rep.action(i)));
    j["matrices"] = std::move(mats);
    if (!label.empty()) j["label"] = label;
    return j;
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

LieRep rep_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("/", "expected a JSON object");
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw ParseError("/d", "missing or non-integer");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("/dim", "missing or non-integer");
    int d = j["d"].get<int>();
    long long dim = j["dim"].get<long long>();
    if (d < 1) throw ParseError("/d", "d must be positive");
    if (dim < 0) throw ParseError("/dim", "dim must be nonnegative");
    if (!j.contains("matrices") || !j["matrices"].is_array())
        throw ParseError("/matrices", "missing or not an array");
    const Json& mats = j["matrices"];
    if (mats.size() != static_cast<std::size_t>(d + 1))
        throw ParseError("/matrices", "expected d+1 = " + std::to_string(d + 1) + " matrices");
    std::vector<Mat> action;
    for (std::size_t mi = 0; mi < mats.size(); ++mi) {
        std::string mpath = "/matrices/" + std::to_string(mi);
        const Json& rows = mats[mi];
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim))
            throw ParseError(mpath, "expected " + std::to_string(dim) + " rows");
        Mat m(dim, dim);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Json& row = rows[r];
            std::string rpath = mpath + "/" + std::to_string(r);
            if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
                throw ParseError(rpath, "expected " + std::to_string(dim) + " entries");
            for (std::size_t c = 0; c < row.size(); ++c)
                m.at(r, c) = rat_from_json(row[c], rpath + "/" + std::to_string(c));
        }
        action.push_back(std::move(m));
    }
    return LieRep(d, std::move(action));
}

LieRep rep_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("/", std::string("malformed JSON: ") + e.what());
    }
    return rep_from_json(j);
}

LieRep rep_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("/", "cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return rep_from_string(text);
}

Json poly_to_json(const Poly& p) {
    Json j = Json::array();
    for (const Rat& c : p.coeffs()) j.push_back(rat_str(c));
    return j;
}

Poly poly_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected a coefficient array");
    std::vector<Rat> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(rat_from_json(j[i], path + "/" + std::to_string(i)));
    return Poly(std::move(c));
}

Json padic_to_json(const PadicScalar& s) {
    Json j;
    j["p"] = s.prime().str();
    j["prec"] = s.prec();
    j["residue"] = s.residue().str();
    return j;
}

}  // namespace liecoh
