#pragma once

// Report documents: JSON serialization of library values and a plain-text
// renderer with aligned tables.

#include <string>
#include <vector>

#include <json.hpp>

#include "tapkit/covers.hpp"
#include "tapkit/measures.hpp"
#include "tapkit/twistpoly.hpp"

namespace tapkit {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;

  Json to_json() const;
  std::string to_text() const;
};

// Coefficients ascending from min_deg; "text" is highest degree first.
Json to_json(const ZLaurent& f, const std::string& var = "t");
Json to_json(const QLaurent& f, const std::string& var = "t");
Json to_json(const ZPoly& f, const std::string& var);
// Number-field coefficients as coordinate arrays on 1, a, a^2, ...
Json to_json(const LPoly& f);
Json to_json(const NFElem& x);
Json to_json(const MahlerMeasure& m, int digits);
Json padic_json(long p, const Rat& value);
Json to_json(const NewtonPolygon& np);
Json to_json(const TeichmullerData& d);
Json to_json(const SmithForm& s);
Json to_json(const GrowthReport& g);
Json to_json(const CyclotomicSplit& s);
Json to_json(const HillarResult& h);
Json to_json(const SplitScan& s);
Json to_json(const VolumeTrend& v);

std::string render_text(const Json& j);

}  // namespace tapkit
