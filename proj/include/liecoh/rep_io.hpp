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

#ifndef LIECOH_REP_IO_HPP
#define LIECOH_REP_IO_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "liecoh/lie.hpp"
#include "liecoh/poly.hpp"

namespace liecoh {

using Json = nlohmann::ordered_json;

/* Parse failures carry the JSON path of the offending field. */
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

   private:
    std::string path_;
};

/* Rep file format:
 *   { "d": int, "dim": int, "matrices": [ [["num/den", ...], ...], ... ],
 *     "label": optional string }
 * with d+1 matrices in the order X_0, ..., X_d. */
Json rep_to_json(const LieRep& rep, const std::string& label = "");
LieRep rep_from_json(const Json& j);
LieRep rep_from_string(const std::string& text);
LieRep rep_from_file(const std::string& path);

/* Polynomials serialize as coefficient arrays, lowest degree first. */
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, const std::string& path = "/poly");

Json mat_to_json(const Mat& m);

/* PadicScalar serializes as { "p": ..., "prec": ..., "residue": "..." }. */
Json padic_to_json(const class PadicScalar& s);

}  // namespace liecoh

#endif
