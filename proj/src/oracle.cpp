#include "sle/oracle.hpp"

#include <cmath>
#include <string>

#include "frame.hpp"
#include "sle/errors.hpp"

namespace sle {

using detail::Key;

double oracle_search_space(const Instance& inst) {
    double orders = 1;
    for (int i = 1; i <= inst.n_add(); ++i) orders *= double(inst.n_old() + i);
    return orders * std::pow(double(inst.ell), double(inst.m_add()));
}

namespace {

class Exhaustive {
  public:
    Exhaustive(const Instance& inst, const SolveOptions& opts, const std::function<bool(const Layout&)>& sink)
        : inst_(inst), f_(inst), opts_(opts), sink_(sink) {
        for (int v = 0; v < inst.n_old(); ++v) seq_.push_back(v);
        key_.assign(inst.G.vertex_count(), 0);
        pages_.assign(f_.nedges.size(), 0);
    }

    std::uint64_t run() {
        place(0);
        return emitted_;
    }

  private:
    // insert new vertex t at every position of the current sequence, left to right
    bool place(int t) {
        if (t == f_.k) {
            for (std::size_t i = 0; i < seq_.size(); ++i) key_[seq_[i]] = Key(i);
            if ((++orders_ & 1023) == 0) opts_.check_deadline();
            return assign(0);
        }
        int v = f_.n + t;
        for (std::size_t pos = 0; pos <= seq_.size(); ++pos) {
            seq_.insert(seq_.begin() + pos, v);
            bool stop = place(t + 1);
            seq_.erase(seq_.begin() + pos);
            if (stop) return true;
        }
        return false;
    }

    // returns true when the sink asked to stop
    bool assign(std::size_t e) {
        if (e == f_.nedges.size()) {
            ++emitted_;
            return !sink_(detail::make_layout(inst_, key_, pages_));
        }
        Key a = key_[f_.nedges[e].first], b = key_[f_.nedges[e].second];
        for (int p = 1; p <= f_.ell; ++p) {
            bool ok = true;
            for (int h : f_.on_page[p - 1]) {
                const auto& he = f_.hedges[h];
                if (detail::keys_cross(a, b, key_[he.l - 1], key_[he.r - 1])) {
                    ok = false;
                    break;
                }
            }
            for (std::size_t o = 0; o < e && ok; ++o)
                if (pages_[o] == p &&
                    detail::keys_cross(a, b, key_[f_.nedges[o].first], key_[f_.nedges[o].second]))
                    ok = false;
            if (!ok) continue;
            pages_[e] = p;
            if (assign(e + 1)) return true;
        }
        pages_[e] = 0;
        return false;
    }

    const Instance& inst_;
    detail::Frame f_;
    const SolveOptions& opts_;
    const std::function<bool(const Layout&)>& sink_;
    std::vector<int> seq_;
    std::vector<Key> key_;
    std::vector<int> pages_;
    std::uint64_t emitted_ = 0;
    std::uint64_t orders_ = 0;
};

void guard(const Instance& inst, const SolveOptions& opts) {
    double space = oracle_search_space(inst);
    if (space > double(opts.oracle_cap))
        throw CapacityError("oracle search space " + std::to_string(space) + " exceeds cap " +
                            std::to_string(opts.oracle_cap));
}

}  // namespace

std::uint64_t enumerate_solutions(const Instance& inst, const std::function<bool(const Layout&)>& sink,
                                  const SolveOptions& opts) {
    guard(inst, opts);
    return Exhaustive(inst, opts, sink).run();
}

std::optional<Layout> solve_exhaustive(const Instance& inst, const SolveOptions& opts) {
    guard(inst, opts);
    std::optional<Layout> found;
    std::function<bool(const Layout&)> sink = [&](const Layout& L) {
        found = L;
        return false;
    };
    Exhaustive(inst, opts, sink).run();
    return found;
}

}  // namespace sle
