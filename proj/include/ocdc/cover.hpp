#ifndef OCDC_COVER_HPP
#define OCDC_COVER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ocdc/graph.hpp"

namespace ocdc {

/// Directed cycle [v1,...,vk] with the implicit closing arc vk -> v1.
///
/// Stored in canonical form: rotated so the smallest vertex comes first.
/// Reversal is a different cycle. Throws ValidationError for k < 3 or
/// repeated vertices.
class DirectedCycle {
 public:
  explicit DirectedCycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int length() const noexcept { return static_cast<int>(vertices_.size()); }
  std::vector<Arc> arcs() const;
  bool contains(Vertex v) const;
  bool contains(Arc a) const;
  DirectedCycle reversed() const;

  auto operator<=>(const DirectedCycle&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Directed path (v1,...,vk); k = 1 is the degenerate single-vertex path.
class DirectedPath {
 public:
  explicit DirectedPath(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int arc_length() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  bool degenerate() const noexcept { return vertices_.size() == 1; }
  Vertex start() const { return vertices_.front(); }
  Vertex end() const { return vertices_.back(); }
  std::vector<Arc> arcs() const;

  auto operator<=>(const DirectedPath&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

enum class CoverKind { CDC, OCDC, SOCDC, PPDC, OPPDC };

std::string to_string(CoverKind k);
CoverKind cover_kind_from_string(const std::string& s);
bool uses_cycles(CoverKind k);

struct CoverCertificate {
  Graph host;
  CoverKind kind = CoverKind::OCDC;
  std::variant<std::vector<DirectedCycle>, std::vector<DirectedPath>> elements;
  std::string provenance;

  const std::vector<DirectedCycle>& cycles() const;
  const std::vector<DirectedPath>& paths() const;
  std::size_t size() const;
};

CoverCertificate make_cycle_certificate(Graph host, CoverKind kind, std::vector<DirectedCycle> cycles, std::string provenance);
CoverCertificate make_path_certificate(Graph host, CoverKind kind, std::vector<DirectedPath> paths, std::string provenance);

struct Violation {
  enum class What {
    NotAnEdge,             // element steps along a non-edge
    ArcMultiplicity,       // arc covered != once
    EdgeMultiplicity,      // edge covered != twice
    StartMultiplicity,     // vertex starts != one path
    EndMultiplicity,       // vertex ends != one path
    EndpointMultiplicity,  // (PPDC) vertex is an end != twice
    SizeBound,             // more elements than n - 1
    VertexOutOfRange,
  };
  What what;
  std::string subject;  // arc, edge or vertex in text form
  long observed = 0;
  long expected = 0;
};

std::string to_string(Violation::What w);

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
  int count = 0;
  int size_bound = 0;  // n - 1
  bool small = false;  // count <= n - 1
  long total_length = 0;
  std::optional<int> cubic_bound;  // n/2 + 2, only for cubic hosts
  std::optional<bool> within_cubic_bound;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
};

// Verifiers never throw on mathematical failures: violations are data.
VerifyReport verify_cdc(const Graph& g, const std::vector<DirectedCycle>& cycles);
VerifyReport verify_ocdc(const Graph& g, const std::vector<DirectedCycle>& cycles);
VerifyReport verify_socdc(const Graph& g, const std::vector<DirectedCycle>& cycles);
VerifyReport verify_ppdc(const Graph& g, const std::vector<DirectedPath>& paths);
VerifyReport verify_oppdc(const Graph& g, const std::vector<DirectedPath>& paths);
VerifyReport verify(const CoverCertificate& cert);

/// Throws CertificateInconsistency with the first violation unless the
/// certificate verifies; used by constructors before returning.
void require_valid(const CoverCertificate& cert);

std::vector<DirectedCycle> reversed_all(const std::vector<DirectedCycle>& cycles);
/// Sort into a deterministic order.
void canonicalize(std::vector<DirectedCycle>& cycles);
void canonicalize(std::vector<DirectedPath>& paths);

}  // namespace ocdc

#endif  // OCDC_COVER_HPP
