#include "nlpabs/solver.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace nlpabs {

namespace {

// One queue abstraction over the three pop disciplines. Membership is
// tracked so an index queues at most once.
class Worklist {
public:
    Worklist(WorklistMode mode, std::size_t n) : mode_(mode), queued_(n, false) {
        for (std::size_t k = 0; k < n; ++k) push(k);
    }

    bool empty() const { return size_ == 0; }

    void push(std::size_t k) {
        if (queued_[k]) return;
        queued_[k] = true;
        ++size_;
        if (mode_ == WorklistMode::Ordered) {
            ordered_.insert(k);
        } else {
            seq_.push_back(k);
        }
    }

    std::size_t pop() {
        std::size_t k = 0;
        if (mode_ == WorklistMode::Ordered) {
            k = *ordered_.begin();
            ordered_.erase(ordered_.begin());
        } else if (mode_ == WorklistMode::Fifo) {
            k = seq_.front();
            seq_.pop_front();
        } else {
            k = seq_.back();
            seq_.pop_back();
        }
        queued_[k] = false;
        --size_;
        return k;
    }

private:
    WorklistMode mode_;
    std::vector<bool> queued_;
    std::size_t size_ = 0;
    std::set<std::size_t> ordered_;
    std::deque<std::size_t> seq_;
};

} // namespace

std::vector<ValuePtr> solve(const EquationSystem& sys, const AbstractDomain& dom,
                            WorklistMode mode, SolveStats* stats) {
    const std::size_t n = sys.size();
    std::vector<ValuePtr> x;
    x.reserve(n);
    std::size_t budget = n;
    for (const auto& eq : sys.eqs) {
        x.push_back(dom.bot(eq.universe));
        budget += dom.height(eq.universe);
    }

    SolveStats local;
    SolveStats& st = stats ? *stats : local;
    st.updates_per_index.assign(n, 0);

    Worklist work(mode, n);
    while (!work.empty()) {
        std::size_t k = work.pop();
        ValuePtr next = evaluate(sys, dom, k, x, &st.unify_ops);
        ++st.evaluations;
        if (dom.equal(next, x[k])) continue;
        if (!dom.leq(x[k], next)) {
            throw std::logic_error("equation not monotone at index " +
                                   sys.eqs[k].index_name + ": " +
                                   dom.render(x[k]) + " -> " + dom.render(next));
        }
        x[k] = std::move(next);
        ++st.updates;
        ++st.updates_per_index[k];
        if (st.updates > budget) {
            throw std::logic_error(
                "update budget exceeded: the domain's chains are longer than "
                "its declared height");
        }
        for (std::size_t r : sys.rdeps[k]) work.push(r);
    }
    return x;
}

bool verify_fixpoint(const EquationSystem& sys, const AbstractDomain& dom,
                     const std::vector<ValuePtr>& x) {
    if (x.size() != sys.size()) return false;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        if (!dom.equal(evaluate(sys, dom, k, x), x[k])) return false;
    }
    return true;
}

} // namespace nlpabs
