#pragma once

#include <string>

#include <json.hpp>

#include "dt4/kchar.hpp"
#include "dt4/localization.hpp"
#include "dt4/partition.hpp"
#include "dt4/series.hpp"
#include "dt4/verifier.hpp"

namespace dt4 {

// Partition interchange form: {"dim": d, "cells": [[i,j,k,l], ...]} with
// cells sorted lexicographically.
json partition_to_json(const DPartition& pi);
DPartition partition_from_json(const json& j);

// Character debug dump: [{"exp": [a,b,c(,e)], "mult": m}, ...] sorted by
// exponent.
json char_to_json(const LaurentChar& chi);

// Factored value: {"scalar": "p/q", "factors": [{"form": [...], "exp": e}]}.
// Coefficients render as decimal strings (Q), coefficient arrays (Q[d]),
// or [exponent, coefficient] pair lists (Q[d1..d4]).
json factored_to_json(const FactoredValue<Rat>& f);
json factored_to_json(const FactoredValue<Poly1>& f);
json factored_to_json(const FactoredValue<Poly4>& f);
FactoredValue<Rat> factored_rat_from_json(const json& j);

json limit_to_json(const SpecializedLimit& lim);

template <typename R, typename Render>
json series_to_json_with(const TruncatedSeries<R>& s, Render render) {
    json coeffs = json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(render(s[n]));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}
json series_to_json(const TruncatedSeries<Rat>& s);

// Sign assignment files are JSON lines {"key":..,"sign":1|-1,"provenance":..}.
void save_signs(const SignAssignment& signs, const std::string& path);
SignAssignment load_signs(const std::string& path);

// Chart file: {"charts": [{"tangent": [[..]x4], "bundle": [d1,d2,d3,d4]}]}.
std::vector<ToricChart> load_charts(const std::string& path);

json poly1_to_json(const Poly1& p);

}  // namespace dt4
