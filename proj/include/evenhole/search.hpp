#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evenhole/audit.hpp"
#include "evenhole/graph.hpp"
#include "evenhole/graph_io.hpp"
#include "evenhole/report.hpp"

namespace evenhole {

/// Runs `work` over every item of `stream` on `workers` threads and hands the
/// records to `sink` in input order. Parse failures become error records.
/// Returns the summary of all records.
Summary process_stream(GraphStream& stream, std::size_t workers,
                       const std::function<GraphRecord(const Graph&, const std::string&)>& work,
                       const std::function<void(const GraphRecord&)>& sink);

/// Record id for the index-th graph of a stream named `source`.
std::string stream_id(const std::string& source, std::size_t index);

/// Membership, then the theorem-1 audit for members. A member without any
/// cut certificate also gets the claim checks and a witness bundle (its
/// holes of length 2l with their jumps and end sets).
GraphRecord search_record(const Graph& g, const std::string& id, const AuditConfig& config);

/// Membership, cut certificate and every audit.
GraphRecord audit_record(const Graph& g, const std::string& id, const AuditConfig& config);

Summary search_counterexamples(GraphStream& stream, const AuditConfig& config,
                               std::size_t workers,
                               const std::function<void(const GraphRecord&)>& sink);

struct CorpusOptions {
  int ell = 4;
  std::size_t max_order = 40;
  std::size_t max_ear = 7;  // subdivision path lengths are drawn from 1..max_ear
  std::uint64_t seed = 1;
};

/// Members of H_l built by randomly subdividing small base graphs and
/// gluing members at a vertex or an edge. Deterministic for a given seed;
/// every graph returned is a connected member.
std::vector<Graph> random_subdivided_members(std::size_t count, const CorpusOptions& options);

/// Theta graphs theta(a,b,c), a <= b <= c <= max_ear, that are members of H_l.
std::vector<Graph> theta_members(std::size_t max_ear, int ell = 4);

}  // namespace evenhole
