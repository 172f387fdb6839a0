#pragma once

// JSON encodings shared by the command-line tool and the tests. Letters are
// signed integers (−3 for 3̄); every top-level document carries a "schema" tag.

#include "json.hpp"

#include "chargelab/chain.hpp"
#include "chargelab/charge.hpp"
#include "chargelab/filling.hpp"
#include "chargelab/folding.hpp"
#include "chargelab/poly.hpp"

namespace chargelab {

using Json = nlohmann::json;

Json to_json(const WeylElement& w);
Json to_json(RootLabel r);
Json to_json(const Column& column);

Json chain_json(const MuChain& chain);
// {w, J, Jplus, Jminus, weight, level}
Json folding_pair_json(const MuChain& chain, const FoldingPair& fp);
// {type, shape, columns, split}
Json filling_json(const Filling& f, bool split);
Json poly_json(const LaurentPoly& p);
Json charge_json(const Filling& tau, const ChargeTrace& trace);
Json qbg_json(const LieType& type);

// Accepts {"type"?, "n"?, "columns": [[...]], "split"?}; entries are integers
// or letter strings such as "3b". A type C document with "split": false holds
// KN columns, which are split here. `fallback` supplies the type when absent.
Filling filling_from_json(const Json& doc, const LieType& fallback);

}  // namespace chargelab
