#ifndef EVIDENTIA_FRAME_HPP
#define EVIDENTIA_FRAME_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "evidentia/errors.hpp"

namespace evidentia {

namespace detail {

/// Membership bit vector. Element i of the frame lives at bit i, word 0
/// holding bits 0..63. Frames with at most 64 elements never touch the
/// heap; larger frames spill the remaining words into a vector.
class BitVec {
public:
    BitVec() : size_(0), word0_(0) {}
    explicit BitVec(std::size_t size) : size_(size), word0_(0) {
        if (size_ > 64) rest_.assign((size_ + 63) / 64 - 1, 0);
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        return (word(i / 64) >> (i % 64)) & 1u;
    }
    void set(std::size_t i) {
        word(i / 64) |= std::uint64_t{1} << (i % 64);
    }

    std::size_t count() const;
    bool none() const;
    bool all() const;

    BitVec operator&(const BitVec& o) const;
    BitVec operator|(const BitVec& o) const;
    /// Complement, masked to the vector's length.
    BitVec operator~() const;

    bool is_subset_of(const BitVec& o) const;
    bool intersects(const BitVec& o) const;

    bool operator==(const BitVec& o) const;
    /// Numeric order of the bit pattern (bit 0 least significant); this is
    /// the canonical order used everywhere masses are listed.
    std::strong_ordering operator<=>(const BitVec& o) const;

private:
    std::size_t words() const { return size_ <= 64 ? 1 : rest_.size() + 1; }
    std::uint64_t word(std::size_t w) const { return w == 0 ? word0_ : rest_[w - 1]; }
    std::uint64_t& word(std::size_t w) { return w == 0 ? word0_ : rest_[w - 1]; }

    std::size_t size_;
    std::uint64_t word0_;
    std::vector<std::uint64_t> rest_;
};

} // namespace detail

/// A frame of discernment: the ordered, finite set of possibilities a
/// reasoner currently envisages. Labels are distinct non-empty strings;
/// "*" is reserved for the serialized encoding of the full frame.
///
/// Frames are immutable values with shared storage; copies are cheap.
/// Two frames are equal iff they carry the same labels in the same order.
class Frame {
public:
    explicit Frame(std::vector<std::string> labels);

    std::size_t size() const { return data_->labels.size(); }
    const std::vector<std::string>& labels() const { return data_->labels; }
    const std::string& label(std::size_t i) const { return data_->labels[i]; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const Frame& o) const {
        return data_ == o.data_ || data_->labels == o.data_->labels;
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::map<std::string, std::size_t, std::less<>> index;
    };
    std::shared_ptr<const Data> data_;
};

/// Throws FrameMismatch unless both frames are equal. `what` names the
/// operation for the error message.
void require_same_frame(const Frame& a, const Frame& b, std::string_view what);

/// A subset of one frame, encoded as a membership bit vector. The empty
/// set and the whole frame are ordinary values of this type. Every
/// FocalSet remembers its frame; set algebra across distinct frames
/// throws FrameMismatch instead of silently aligning indices.
class FocalSet {
public:
    static FocalSet empty_set(const Frame& frame);
    static FocalSet full_set(const Frame& frame);
    /// Builds the subset holding exactly `members`; unknown labels throw.
    static FocalSet of(const Frame& frame, const std::vector<std::string>& members);
    static FocalSet singleton(const Frame& frame, std::size_t index);

    const Frame& frame() const { return frame_; }
    std::size_t frame_size() const { return bits_.size(); }

    bool contains(std::size_t index) const { return bits_.test(index); }
    bool contains(std::string_view label) const;
    bool is_empty() const { return bits_.none(); }
    bool is_full() const { return bits_.all(); }
    bool is_singleton() const { return bits_.count() == 1; }
    std::size_t count() const { return bits_.count(); }
    std::vector<std::string> members() const;

    FocalSet intersect(const FocalSet& o) const;
    FocalSet unite(const FocalSet& o) const;
    FocalSet complement() const;
    bool is_subset_of(const FocalSet& o) const;
    bool intersects(const FocalSet& o) const;

    bool operator==(const FocalSet& o) const {
        return frame_ == o.frame_ && bits_ == o.bits_;
    }
    /// Canonical order: the bit pattern read as an integer. The empty set
    /// sorts first and the full frame last.
    std::strong_ordering operator<=>(const FocalSet& o) const;

    /// Render as "{a, b}" using frame labels ("{}" for the empty set).
    std::string to_string() const;

private:
    FocalSet(Frame frame, detail::BitVec bits)
        : frame_(std::move(frame)), bits_(std::move(bits)) {}

    Frame frame_;
    detail::BitVec bits_;
};

/// Shafer's "abridging or tightening" maneuver: a total, surjective map
/// from the elements of a source frame onto the elements of a smaller
/// one. The target frame is built from the mapping, target labels ordered
/// by first appearance along the source order.
class Coarsening {
public:
    Coarsening(const Frame& source, const std::map<std::string, std::string>& mapping);

    const Frame& source() const { return source_; }
    const Frame& target() const { return target_; }

    /// Image of a source subset: the union of its members' images.
    FocalSet apply(const FocalSet& s) const;

private:
    Frame source_;
    Frame target_;
    std::vector<std::size_t> image_; // source index -> target index
};

/// Shafer's "enlarging or loosening" maneuver: each source element expands
/// into a non-empty block of new elements; blocks are pairwise disjoint
/// and jointly make up the target frame (ordered by source element, then
/// block order).
class Refinement {
public:
    Refinement(const Frame& source,
               const std::map<std::string, std::vector<std::string>>& expansion);

    const Frame& source() const { return source_; }
    const Frame& target() const { return target_; }

    /// Cylinder extension of a source subset: the union of its members'
    /// blocks.
    FocalSet apply(const FocalSet& s) const;

    /// The coarsening that collapses every block back onto its source
    /// element; apply() then inverse().apply() is the identity on subsets.
    Coarsening inverse() const;

private:
    Frame source_;
    Frame target_;
    std::vector<std::vector<std::size_t>> blocks_; // source index -> target indices
};

/// A finite collection of non-empty subsets of one frame, viewed as
/// hyperedges.
class Hypergraph {
public:
    Hypergraph(Frame frame, std::vector<FocalSet> edges);

    const Frame& frame() const { return frame_; }
    const std::vector<FocalSet>& edges() const { return edges_; }

private:
    Frame frame_;
    std::vector<FocalSet> edges_;
};

/// Acyclicity test by Graham reduction: repeatedly delete vertices that
/// occur in exactly one edge and edges contained in another edge. The
/// hypergraph is a hypertree iff this leaves at most one edge. The verdict
/// does not depend on the order in which reduction steps are applied; the
/// rng overload picks applicable steps at random so tests can exercise
/// that confluence. An edgeless hypergraph counts as a hypertree.
bool is_hypertree(const Hypergraph& h);
bool is_hypertree(const Hypergraph& h, std::mt19937& rng);

} // namespace evidentia

#endif
