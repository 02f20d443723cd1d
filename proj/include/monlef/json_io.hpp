#pragma once

#include "json.hpp"

#include "monlef/binomial.hpp"
#include "monlef/decompose.hpp"
#include "monlef/ideal.hpp"
#include "monlef/lefschetz.hpp"
#include "monlef/maci.hpp"
#include "monlef/table.hpp"

namespace monlef {

using Json = nlohmann::json;

/// {"n": 3, "gens": [[3,0,0], ...]} with exponent vectors in canonical order.
Json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const Json& j);

Json hilbert_to_json(const HilbertData& h);

/// {"property":"strong","verdict":false,"failures":[...],"hilbert":[...]}
Json report_to_json(const LefschetzReport& r);

Json decomposition_to_json(const Decomposition& dec);
Json gluing_to_json(const GluingSpec& spec);

/// {"s":1,"n":3,"d":[6,7,4],"alpha":[[2,6,0]]}
Json table_to_json(const Table& t);
Table table_from_json(const Json& j);

Json certificate_to_json(const GorensteinCertificate& cert);

Json scan_row_to_json(const ScanRow& row);

} // namespace monlef
