#pragma once

#include <cstdint>
#include <utility>

#include "fracdim/geometry.hpp"

namespace fracdim {

enum class MeshKind { square, triangle };
enum class CellMode { closed, half_open };
enum class Diagonal { ne, nw };  // ne: lower-left to upper-right

std::string_view mesh_kind_name(MeshKind kind);

/// Axis-aligned delta-mesh: cell (m, n) spans
/// [offset.x + m*delta, offset.x + (m+1)*delta] x [same in y].
///
/// Closed cells count boundary-only contact (the default); half-open cells
/// [m*delta, (m+1)*delta) assign every point to exactly one cell. The
/// triangle mesh splits each cell along the configured diagonal into two
/// right isoceles triangles of leg delta; in closed mode a point on the
/// diagonal belongs to both halves, in half-open mode the diagonal belongs
/// to the lower (ne) respectively lower-left (nw) half.
struct MeshSpec {
    Scalar delta;
    Point offset{Scalar(Dyadic(0)), Scalar(Dyadic(0))};
    CellMode cells = CellMode::closed;
    Diagonal diagonal = Diagonal::ne;

    MeshSpec() : delta(Dyadic(1)) {}
    explicit MeshSpec(Scalar d) : delta(std::move(d)) {}
};

enum class Half : std::uint8_t { none, lower, upper };

struct CellKey {
    std::int64_t m = 0;
    std::int64_t n = 0;
    Half half = Half::none;

    bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const;
};

struct CountRecord {
    MeshKind mesh = MeshKind::square;
    Scalar delta;
    std::uint64_t count = 0;
};

/// Index rectangle of cells whose extent meets a bounding box; iterates in
/// row-major order without materializing anything.
class CandidateCells {
public:
    CandidateCells(std::int64_t m0, std::int64_t m1, std::int64_t n0, std::int64_t n1)
        : m0_(m0), m1_(m1), n0_(n0), n1_(n1) {}

    std::int64_t m_begin() const { return m0_; }
    std::int64_t m_end() const { return m1_ + 1; }
    std::int64_t n_begin() const { return n0_; }
    std::int64_t n_end() const { return n1_ + 1; }
    std::uint64_t size() const;

    class iterator {
    public:
        iterator(const CandidateCells* owner, std::int64_t m, std::int64_t n)
            : owner_(owner), m_(m), n_(n) {}
        CellKey operator*() const { return CellKey{m_, n_, Half::none}; }
        iterator& operator++() {
            if (++m_ > owner_->m1_) {
                m_ = owner_->m0_;
                ++n_;
            }
            return *this;
        }
        bool operator==(const iterator& rhs) const { return m_ == rhs.m_ && n_ == rhs.n_; }

    private:
        const CandidateCells* owner_;
        std::int64_t m_, n_;
    };

    iterator begin() const { return iterator(this, m0_, n0_); }
    iterator end() const { return iterator(this, m0_, n1_ + 1); }

private:
    std::int64_t m0_, m1_, n0_, n1_;
};

/// Every cell whose closed (resp. half-open) extent intersects the closed
/// bounding box. ValidationError for delta <= 0.
CandidateCells enumerate_candidate_cells(const std::pair<Point, Point>& bbox,
                                         const MeshSpec& spec);

struct CountOptions {
    unsigned workers = 1;       // data-parallel over primitives; result is identical
    bool require_exact = false; // ModeError instead of falling back to approx
};

/// Number of distinct mesh cells meeting the union of primitives. Exact when
/// the set, delta and offset are all dyadic; approx (kApproxTol predicates)
/// otherwise. EmptyInputError on an empty set.
CountRecord count_square_mesh(const GeoSet& g, const MeshSpec& spec,
                              const CountOptions& opts = {});

/// Same over the two closed (or half-open) triangles of each cell; satisfies
/// N <= T <= 2N against count_square_mesh for the same spec.
CountRecord count_triangle_mesh(const GeoSet& g, const MeshSpec& spec,
                                const CountOptions& opts = {});

/// Independent lower-bound oracle: samples each primitive (vertices, edge
/// lattice, interior lattice at the given density, rounded up to a power of
/// two) and counts the distinct cells containing a sample under closed
/// semantics. Always <= the exact count; reaches it at sufficient density
/// for convex filled sets.
CountRecord sampling_oracle_count(const GeoSet& g, const MeshSpec& spec, MeshKind kind,
                                  unsigned density_per_unit);

}  // namespace fracdim
