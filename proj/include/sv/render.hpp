#pragma once

#include "sv/beilinson.hpp"

#include <iosfwd>

namespace sv {

enum class Format { Text, Json, Csv };

// All renderers are deterministic: the same inputs produce byte-identical
// output.  JSON documents carry schema_version 1 and are described by
// docs/svcoh-output.schema.json.

void render_cohom(std::ostream& os, Format f, const SegreVeronese& X,
                  const FormalSheaf& V, const std::vector<int>& twist_applied,
                  const CohomologyVector& hv);

void render_certificate(std::ostream& os, Format f, const SegreVeronese& X,
                        const FormalSheaf& V, const UlrichCertificate& cert);

void render_lines(std::ostream& os, Format f, const SegreVeronese& X,
                  const std::vector<std::vector<int>>& tuples);

void render_omega(std::ostream& os, Format f, const SegreVeronese& X,
                  const std::vector<BoxAtom>& atoms);

void render_alpha(std::ostream& os, Format f, const AlphaTable& T);

void render_resolution(std::ostream& os, Format f, const AlphaTable& T,
                       const ResolutionShape& shape, bool chi_ok);

void render_monad(std::ostream& os, Format f, const AlphaTable& T,
                  const MonadShape& shape, bool chi_ok);

void render_regularity(std::ostream& os, Format f, const SegreVeronese& X,
                       const FormalSheaf& V, int grid, const RegularityReport& rep);

void render_variety_info(std::ostream& os, Format f, const SegreVeronese& X);

} // namespace sv
