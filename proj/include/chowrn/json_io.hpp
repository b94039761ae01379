#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chowrn/chow_ring.hpp"
#include "chowrn/matroid.hpp"
#include "chowrn/rank_nullity.hpp"
#include "chowrn/tautological.hpp"
#include "chowrn/uniform.hpp"

namespace chowrn {

using nlohmann::json;

// {"type":"uniform","r":R,"n":N} | {"type":"bases","n":N,"bases":[[1,2],...]}
// | {"type":"graphic","vertices":V,"edges":[[1,2],...]} | {"type":"direct_sum","parts":[...]}
// Elements and vertices are 1-indexed. An optional "label" string is kept.
Matroid matroid_from_json(const json& j);
Matroid matroid_from_json_text(const std::string& text);
json matroid_to_json(const Matroid& m);  // always the "bases" form

// {"degree":d,"terms":[{"chain":[[1],[1,2]],"powers":[1,1],"coeff":"-3"}]}; degree is null for zero.
json chow_element_to_json(const ChowElement& a);
ChowElement chow_element_from_json(const json& j, const RingPtr& ring);

// Groups terms of a Chern class by the level sequence of their chain (ranks for S, nullities for Q) and the
// powers: [{"levels":[..],"powers":[..],"coeff":"c","terms":count}]. Mixed coefficients inside one group are
// reported as separate entries.
json chern_shape_summary(const ChowElement& a, const Matroid& m, ChernSide side);

// {"k":1,"weights":[{"chain":[[1],[1,2,3]],"w":-2}]}
json csm_to_json(const MinkowskiWeight& w, int k);

json census_to_json(const RelationCensus& c);

json z_polynomial_to_json(const ZPolynomial& p);

// "label,v0,v1,..." without quoting.
std::string hilbert_csv_row(const std::string& label, const std::vector<std::size_t>& values);

json subset_to_json(Subset s);

}  // namespace chowrn
