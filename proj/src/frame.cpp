#include "evidentia/frame.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace evidentia {

namespace detail {

std::size_t BitVec::count() const {
    std::size_t c = std::popcount(word0_);
    for (auto w : rest_) c += std::popcount(w);
    return c;
}

bool BitVec::none() const {
    if (word0_ != 0) return false;
    return std::all_of(rest_.begin(), rest_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVec::all() const {
    return count() == size_;
}

BitVec BitVec::operator&(const BitVec& o) const {
    BitVec r(size_);
    r.word0_ = word0_ & o.word0_;
    for (std::size_t i = 0; i < r.rest_.size(); ++i) r.rest_[i] = rest_[i] & o.rest_[i];
    return r;
}

BitVec BitVec::operator|(const BitVec& o) const {
    BitVec r(size_);
    r.word0_ = word0_ | o.word0_;
    for (std::size_t i = 0; i < r.rest_.size(); ++i) r.rest_[i] = rest_[i] | o.rest_[i];
    return r;
}

BitVec BitVec::operator~() const {
    BitVec r(size_);
    r.word0_ = ~word0_;
    for (std::size_t i = 0; i < r.rest_.size(); ++i) r.rest_[i] = ~rest_[i];
    // Mask off the bits beyond size_ in the top word.
    std::size_t top_bits = size_ % 64;
    if (top_bits != 0) {
        std::uint64_t mask = (std::uint64_t{1} << top_bits) - 1;
        r.word(r.words() - 1) &= mask;
    }
    return r;
}

bool BitVec::is_subset_of(const BitVec& o) const {
    if ((word0_ & ~o.word0_) != 0) return false;
    for (std::size_t i = 0; i < rest_.size(); ++i)
        if ((rest_[i] & ~o.rest_[i]) != 0) return false;
    return true;
}

bool BitVec::intersects(const BitVec& o) const {
    if ((word0_ & o.word0_) != 0) return true;
    for (std::size_t i = 0; i < rest_.size(); ++i)
        if ((rest_[i] & o.rest_[i]) != 0) return true;
    return false;
}

bool BitVec::operator==(const BitVec& o) const {
    return size_ == o.size_ && word0_ == o.word0_ && rest_ == o.rest_;
}

std::strong_ordering BitVec::operator<=>(const BitVec& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    // Most significant word decides first.
    for (std::size_t w = words(); w-- > 0;) {
        if (auto c = word(w) <=> o.word(w); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

} // namespace detail

Frame::Frame(std::vector<std::string> labels) {
    if (labels.empty())
        throw InvalidArgument("frame needs at least one label");
    auto data = std::make_shared<Data>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& l = labels[i];
        if (l.empty())
            throw InvalidArgument("frame label must not be empty");
        if (l == "*")
            throw InvalidArgument("frame label \"*\" is reserved for the full frame");
        if (!data->index.emplace(l, i).second)
            throw InvalidArgument("duplicate frame label \"" + l + "\"");
    }
    data->labels = std::move(labels);
    data_ = std::move(data);
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

void require_same_frame(const Frame& a, const Frame& b, std::string_view what) {
    if (!(a == b))
        throw FrameMismatch(std::string(what) + ": values belong to different frames");
}

FocalSet FocalSet::empty_set(const Frame& frame) {
    return FocalSet(frame, detail::BitVec(frame.size()));
}

FocalSet FocalSet::full_set(const Frame& frame) {
    detail::BitVec bits(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) bits.set(i);
    return FocalSet(frame, std::move(bits));
}

FocalSet FocalSet::of(const Frame& frame, const std::vector<std::string>& members) {
    detail::BitVec bits(frame.size());
    for (const auto& m : members) {
        auto idx = frame.index_of(m);
        if (!idx)
            throw InvalidArgument("label \"" + m + "\" is not in the frame");
        bits.set(*idx);
    }
    return FocalSet(frame, std::move(bits));
}

FocalSet FocalSet::singleton(const Frame& frame, std::size_t index) {
    if (index >= frame.size())
        throw InvalidArgument("singleton index out of range");
    detail::BitVec bits(frame.size());
    bits.set(index);
    return FocalSet(frame, std::move(bits));
}

bool FocalSet::contains(std::string_view label) const {
    auto idx = frame_.index_of(label);
    if (!idx)
        throw InvalidArgument("label \"" + std::string(label) + "\" is not in the frame");
    return bits_.test(*idx);
}

std::vector<std::string> FocalSet::members() const {
    std::vector<std::string> out;
    out.reserve(count());
    for (std::size_t i = 0; i < frame_.size(); ++i)
        if (bits_.test(i)) out.push_back(frame_.label(i));
    return out;
}

FocalSet FocalSet::intersect(const FocalSet& o) const {
    require_same_frame(frame_, o.frame_, "intersect");
    return FocalSet(frame_, bits_ & o.bits_);
}

FocalSet FocalSet::unite(const FocalSet& o) const {
    require_same_frame(frame_, o.frame_, "unite");
    return FocalSet(frame_, bits_ | o.bits_);
}

FocalSet FocalSet::complement() const {
    return FocalSet(frame_, ~bits_);
}

bool FocalSet::is_subset_of(const FocalSet& o) const {
    require_same_frame(frame_, o.frame_, "is_subset_of");
    return bits_.is_subset_of(o.bits_);
}

bool FocalSet::intersects(const FocalSet& o) const {
    require_same_frame(frame_, o.frame_, "intersects");
    return bits_.intersects(o.bits_);
}

std::strong_ordering FocalSet::operator<=>(const FocalSet& o) const {
    require_same_frame(frame_, o.frame_, "compare");
    return bits_ <=> o.bits_;
}

std::string FocalSet::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t i = 0; i < frame_.size(); ++i) {
        if (!bits_.test(i)) continue;
        if (!first) out << ", ";
        out << frame_.label(i);
        first = false;
    }
    out << '}';
    return out.str();
}

Coarsening::Coarsening(const Frame& source, const std::map<std::string, std::string>& mapping)
    : source_(source), target_(source /* replaced below */) {
    for (const auto& [from, to] : mapping) {
        if (!source.index_of(from))
            throw InvalidArgument("coarsening maps unknown label \"" + from + "\"");
        if (to.empty())
            throw InvalidArgument("coarsening target label must not be empty");
    }
    // Target labels in order of first appearance along the source order.
    std::vector<std::string> target_labels;
    std::map<std::string, std::size_t> target_index;
    image_.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        auto it = mapping.find(source.label(i));
        if (it == mapping.end())
            throw InvalidArgument("coarsening is not total: label \"" + source.label(i) +
                                  "\" has no image");
        auto [pos, inserted] = target_index.emplace(it->second, target_labels.size());
        if (inserted) target_labels.push_back(it->second);
        image_.push_back(pos->second);
    }
    target_ = Frame(std::move(target_labels));
}

FocalSet Coarsening::apply(const FocalSet& s) const {
    require_same_frame(s.frame(), source_, "coarsening");
    std::vector<std::string> members;
    for (std::size_t i = 0; i < source_.size(); ++i)
        if (s.contains(i)) members.push_back(target_.label(image_[i]));
    return FocalSet::of(target_, members);
}

Refinement::Refinement(const Frame& source,
                       const std::map<std::string, std::vector<std::string>>& expansion)
    : source_(source), target_(source /* replaced below */) {
    std::vector<std::string> target_labels;
    std::map<std::string, std::size_t> seen;
    blocks_.resize(source.size());
    for (const auto& [from, block] : expansion) {
        if (!source.index_of(from))
            throw InvalidArgument("refinement expands unknown label \"" + from + "\"");
        if (block.empty())
            throw InvalidArgument("refinement block for \"" + from + "\" is empty");
    }
    for (std::size_t i = 0; i < source.size(); ++i) {
        auto it = expansion.find(source.label(i));
        if (it == expansion.end())
            throw InvalidArgument("refinement is not total: label \"" + source.label(i) +
                                  "\" has no block");
        for (const auto& to : it->second) {
            if (to.empty())
                throw InvalidArgument("refinement target label must not be empty");
            if (!seen.emplace(to, target_labels.size()).second)
                throw InvalidArgument("refinement blocks overlap on label \"" + to + "\"");
            blocks_[i].push_back(target_labels.size());
            target_labels.push_back(to);
        }
    }
    target_ = Frame(std::move(target_labels));
}

FocalSet Refinement::apply(const FocalSet& s) const {
    require_same_frame(s.frame(), source_, "refinement");
    std::vector<std::string> members;
    for (std::size_t i = 0; i < source_.size(); ++i) {
        if (!s.contains(i)) continue;
        for (auto t : blocks_[i]) members.push_back(target_.label(t));
    }
    return FocalSet::of(target_, members);
}

Coarsening Refinement::inverse() const {
    std::map<std::string, std::string> mapping;
    for (std::size_t i = 0; i < source_.size(); ++i)
        for (auto t : blocks_[i]) mapping[target_.label(t)] = source_.label(i);
    return Coarsening(target_, mapping);
}

Hypergraph::Hypergraph(Frame frame, std::vector<FocalSet> edges)
    : frame_(std::move(frame)), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        require_same_frame(e.frame(), frame_, "hypergraph edge");
        if (e.is_empty())
            throw InvalidArgument("hypergraph edges must be non-empty");
    }
}

namespace {

// One Graham reduction step. Candidate moves are either "strip vertex v
// from the single edge containing it" or "drop edge i, it is contained in
// edge j". `pick` selects which applicable move to apply; reduction is
// confluent, so any selection policy reaches the same verdict.
struct Move {
    bool is_vertex;
    std::size_t vertex;
    std::size_t edge;
};

bool reduce_to_at_most_one_edge(std::vector<FocalSet> edges,
                                const std::function<std::size_t(std::size_t)>& pick) {
    if (edges.empty()) return true;
    const Frame& frame = edges.front().frame();
    for (;;) {
        std::vector<Move> moves;
        for (std::size_t v = 0; v < frame.size(); ++v) {
            std::size_t occurrences = 0, where = 0;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].contains(v)) {
                    ++occurrences;
                    where = i;
                }
            }
            if (occurrences == 1) moves.push_back({true, v, where});
        }
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = 0; j < edges.size(); ++j)
                if (i != j && edges[i].is_subset_of(edges[j])) {
                    moves.push_back({false, 0, i});
                    break;
                }
        if (moves.empty()) break;
        const Move& m = moves[pick(moves.size())];
        if (m.is_vertex) {
            FocalSet mask = FocalSet::singleton(frame, m.vertex).complement();
            edges[m.edge] = edges[m.edge].intersect(mask);
        } else {
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(m.edge));
        }
    }
    return edges.size() <= 1;
}

} // namespace

bool is_hypertree(const Hypergraph& h) {
    return reduce_to_at_most_one_edge(h.edges(), [](std::size_t) { return 0; });
}

bool is_hypertree(const Hypergraph& h, std::mt19937& rng) {
    return reduce_to_at_most_one_edge(h.edges(), [&rng](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    });
}

} // namespace evidentia
