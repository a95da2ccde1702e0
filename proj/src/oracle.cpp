#include "chipfire/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "chipfire/structure.hpp"

namespace chipfire::oracle {

namespace {

std::uint64_t key_of(LatticePoint p) { return (p.x << 32) | p.y; }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::string Strategy::name() const {
    switch (kind) {
        case StrategyKind::random: return "random(" + std::to_string(seed) + ")";
        case StrategyKind::leftmost_first: return "leftmost-first";
        case StrategyKind::fifo_queue: return "fifo-queue";
        case StrategyKind::row_by_row: return "row-by-row";
    }
    return "unknown";
}

ChipCount OracleState::total_chips() const {
    ChipCount t;
    for (std::size_t y = 0; y < chips.height(); ++y)
        for (std::size_t x = 0; x < chips.width(); ++x) t += chips.at(x, y);
    return t;
}

// Tracks the set of fireable vertices and decides which one goes next.
class Simulator::Scheduler {
public:
    virtual ~Scheduler() = default;
    virtual void update(LatticePoint v, bool fireable) = 0;
    virtual std::optional<LatticePoint> pick() = 0;
};

namespace {

class RandomScheduler final : public Simulator::Scheduler {
public:
    explicit RandomScheduler(std::uint64_t seed) : rng_(seed) {}

    void update(LatticePoint v, bool fireable) override {
        const auto key = key_of(v);
        const auto it = index_.find(key);
        if (fireable && it == index_.end()) {
            index_.emplace(key, items_.size());
            items_.push_back(v);
        } else if (!fireable && it != index_.end()) {
            const std::size_t slot = it->second;
            index_.erase(it);
            if (slot + 1 != items_.size()) {
                items_[slot] = items_.back();
                index_[key_of(items_[slot])] = slot;
            }
            items_.pop_back();
        }
    }

    std::optional<LatticePoint> pick() override {
        if (items_.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> dist(0, items_.size() - 1);
        return items_[dist(rng_)];
    }

private:
    std::mt19937_64 rng_;
    std::vector<LatticePoint> items_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Always fires the fireable vertex with the smallest key.
template <typename KeyFn>
class OrderedScheduler final : public Simulator::Scheduler {
public:
    void update(LatticePoint v, bool fireable) override {
        if (fireable) {
            set_.insert(KeyFn{}(v));
        } else {
            set_.erase(KeyFn{}(v));
        }
    }

    std::optional<LatticePoint> pick() override {
        if (set_.empty()) return std::nullopt;
        const auto& k = *set_.begin();
        return LatticePoint{std::get<2>(k), std::get<3>(k)};
    }

private:
    using Key = std::tuple<std::int64_t, std::uint64_t, std::uint64_t, std::uint64_t>;
    std::set<Key> set_;
};

struct LeftmostKey {
    auto operator()(LatticePoint v) const {
        return std::tuple<std::int64_t, std::uint64_t, std::uint64_t, std::uint64_t>{v.distance(), v.row(), v.x, v.y};
    }
};

struct RowMajorKey {
    auto operator()(LatticePoint v) const {
        return std::tuple<std::int64_t, std::uint64_t, std::uint64_t, std::uint64_t>{
            static_cast<std::int64_t>(v.row()), v.y, v.x, v.y};
    }
};

class FifoScheduler final : public Simulator::Scheduler {
public:
    void update(LatticePoint v, bool fireable) override {
        if (fireable && queued_.insert(key_of(v)).second) queue_.push_back(v);
    }

    // A vertex is re-queued (at the back) by update() if it is still fireable after firing.
    std::optional<LatticePoint> pick() override {
        if (queue_.empty()) return std::nullopt;
        const LatticePoint v = queue_.front();
        queue_.pop_front();
        queued_.erase(key_of(v));
        return v;
    }

private:
    std::deque<LatticePoint> queue_;
    std::unordered_set<std::uint64_t> queued_;
};

std::unique_ptr<Simulator::Scheduler> make_scheduler(Strategy s) {
    switch (s.kind) {
        case StrategyKind::random: return std::make_unique<RandomScheduler>(s.seed);
        case StrategyKind::leftmost_first: return std::make_unique<OrderedScheduler<LeftmostKey>>();
        case StrategyKind::fifo_queue: return std::make_unique<FifoScheduler>();
        case StrategyKind::row_by_row: return std::make_unique<OrderedScheduler<RowMajorKey>>();
    }
    throw std::invalid_argument("unknown strategy");
}

}  // namespace

Simulator::Simulator(unsigned n, Strategy strategy, unsigned max_n) : scheduler_(make_scheduler(strategy)) {
    if (n > max_n) {
        throw std::invalid_argument("oracle simulation limited to n <= " + std::to_string(max_n) + ", got " +
                                    std::to_string(n));
    }
    state_.n = n;
    state_.chips = Grid<ChipCount>(2, 2);
    state_.firings = Grid<std::uint64_t>(2, 2);
    state_.chips.ref(0, 0) = ChipCount::pow2(n);
    touched({0, 0});
}

Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

void Simulator::touched(LatticePoint v) { scheduler_->update(v, state_.chips.at(v.x, v.y) >= ChipCount(2)); }

void Simulator::fire(LatticePoint v) {
    state_.chips.ensure(v.x + 1, v.y + 1);
    state_.firings.ensure(v.x + 1, v.y + 1);
    state_.chips.ref(v.x, v.y) -= 2;
    state_.chips.ref(v.x + 1, v.y) += 1;
    state_.chips.ref(v.x, v.y + 1) += 1;
    state_.firings.ref(v.x, v.y) += 1;
    ++state_.moves;
    touched(v);
    touched({v.x + 1, v.y});
    touched({v.x, v.y + 1});
}

bool Simulator::step() {
    const auto v = scheduler_->pick();
    if (!v) return false;
    fire(*v);
    return true;
}

bool Simulator::stable() const {
    for (std::size_t y = 0; y < state_.chips.height(); ++y)
        for (std::size_t x = 0; x < state_.chips.width(); ++x)
            if (state_.chips.at(x, y) >= ChipCount(2)) return false;
    return true;
}

std::uint64_t default_move_cap(unsigned n) {
    return (ChipCount::pow2(n) * (row_bound(n) + 1)).to_u64();
}

OracleState simulate(unsigned n, Strategy strategy, std::uint64_t move_cap) {
    Simulator sim(n, strategy);
    while (sim.step()) {
        if (sim.state().moves > move_cap) {
            throw CapExceededError("oracle exceeded " + std::to_string(move_cap) + " moves for n=" +
                                   std::to_string(n) + " with " + strategy.name());
        }
    }
    return sim.take_state();
}

OracleState simulate(unsigned n, Strategy strategy) { return simulate(n, strategy, default_move_cap(n)); }

Grid<ChipCount> arrivals(const OracleState& s) {
    const std::size_t w = s.firings.width() + 1;
    const std::size_t h = s.firings.height() + 1;
    Grid<ChipCount> out(w, h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            ChipCount v = (x == 0 && y == 0) ? ChipCount::pow2(s.n) : ChipCount{};
            if (x > 0) v += s.firings.at(x - 1, y);
            if (y > 0) v += s.firings.at(x, y - 1);
            out.ref(x, y) = v;
        }
    }
    return out;
}

ConfluenceReport confluence_check(unsigned n, std::size_t trials, std::uint64_t seed) {
    if (trials < 2) throw std::invalid_argument("confluence check needs at least two random trials");

    std::vector<Strategy> strategies;
    for (std::size_t t = 0; t < trials; ++t) strategies.push_back(Strategy::random(splitmix64(seed + t)));
    strategies.push_back(Strategy::leftmost_first());
    strategies.push_back(Strategy::fifo_queue());
    strategies.push_back(Strategy::row_by_row());

    std::vector<OracleState> states(strategies.size());
    std::vector<std::string> errors(strategies.size());
    const auto count = static_cast<std::ptrdiff_t>(strategies.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            states[k] = simulate(n, strategies[k]);
        } catch (const std::exception& e) {
            errors[k] = e.what();
        }
    }

    ConfluenceReport report{n, true, strategies.size(), 0, {}};
    for (std::size_t k = 0; k < strategies.size(); ++k) {
        if (!errors[k].empty()) {
            report.pass = false;
            report.detail = strategies[k].name() + ": " + errors[k];
            return report;
        }
    }
    report.moves = states[0].moves;
    for (std::size_t k = 1; k < states.size(); ++k) {
        std::string what;
        if (states[k].moves != states[0].moves) {
            what = "move totals differ (" + std::to_string(states[k].moves) + " vs " +
                   std::to_string(states[0].moves) + ")";
        } else if (!same_cells(states[k].chips, states[0].chips)) {
            what = "stable grids differ";
        } else if (!same_cells(states[k].firings, states[0].firings)) {
            what = "firing counts differ";
        }
        if (!what.empty()) {
            report.pass = false;
            report.detail = strategies[k].name() + " vs " + strategies[0].name() + ": " + what;
            return report;
        }
    }
    return report;
}

}  // namespace chipfire::oracle
