#pragma once

#include <string>

#include "fqm/crtfast.hpp"
#include "fqm/densemap.hpp"
#include "fqm/dynamics.hpp"
#include "fqm/modarith.hpp"
#include "fqm/verify.hpp"

namespace fqm {

/// External document model. All matrices are row-major with 0-based
/// indices; complex values are [re, im] pairs; floating values are
/// written with 17 significant digits so identical inputs produce
/// byte-identical output.
enum class DocKind { unitary, permutation, sl2, vector, factored };

struct Document {
    DocKind kind = DocKind::unitary;
    int64_t n = 0;
    DenseMap matrix;                   // unitary
    std::vector<int64_t> permutation;  // permutation
    int64_t a = 0, b = 0, c = 0, d = 0; // sl2
    std::vector<cd> vec;               // vector
    std::vector<int64_t> factors;      // factored
    std::vector<int64_t> perm_forward; // factored
    std::vector<DenseMap> blocks;      // factored
};

std::string dump_unitary(const DenseMap& m);
std::string dump_permutation(const PermutationMap& p);
std::string dump_sl2(const SL2Element& a);
std::string dump_vector(const std::vector<cd>& v);
std::string dump_factored(const FactoredMap& fm);
std::string dump_sino(const SinoContext& ctx);
std::string dump_bench_json(const BenchReport& r);
std::string dump_bench_csv(const BenchReport& r);
std::string dump_orbit_partition_json(const SL2Element& a, int64_t order,
                                      const std::vector<OrbitClass>& classes);
std::string dump_orbit_partition_csv(const std::vector<OrbitClass>& classes);
std::string dump_orbit_point_json(const SL2Element& a, int64_t order,
                                  const std::vector<TorusPoint>& points);
std::string dump_orbit_point_csv(const std::vector<TorusPoint>& points);
std::string dump_verification(const VerificationReport& report);

/// Parse any of the five document kinds. Throws Error on malformed input.
Document parse_document(const std::string& text);

/// Rebuild a FactoredMap from a factored document (the Sino context is
/// recomputed from n; the stored permutation and blocks are validated).
FactoredMap to_factored_map(const Document& doc);

} // namespace fqm
