#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "antimagic/bipartite_pipeline.hpp"
#include "antimagic/io.hpp"
#include "antimagic/mindegree_pipeline.hpp"

// Glue between the pipelines and the document layer, shared by the CLI and
// the self-test so both produce bit-for-bit identical certificates.

namespace antimagic {

enum class OrientMode { bipartite, mindegree };

// The bipartite pipeline is deterministic and only records the seed; the
// min-degree pipeline also feeds it to the spanning-cut restart.
inline std::string orient_document(const Graph& g, OrientMode mode,
                                   std::optional<std::uint64_t> seed, bool unsafe = false) {
    CertificateMeta meta;
    meta.seed = seed;
    Certificate cert;
    if (mode == OrientMode::bipartite) {
        auto plan = plan_bipartite(g);
        meta.pipeline = "bipartite";
        meta.case_tag = case_name(plan.tag);
        cert = label_bipartite(plan);
    } else {
        meta.pipeline = "mindegree";
        meta.case_tag = "";
        cert = antimagic_orientation_mindegree(g, unsafe, seed);
    }
    return serialize_certificate(cert, meta);
}

} // namespace antimagic
