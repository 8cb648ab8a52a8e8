#include "electoral/interval_set.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace electoral {

namespace {

void check_endpoints(const Interval& iv) {
    if (!(iv.lo >= 0.0) || !(iv.hi <= 1.0)) {
        throw std::domain_error("interval endpoint outside [0,1]");
    }
    if (iv.lo > iv.hi) {
        throw std::domain_error("interval with lo > hi");
    }
}

// Merge sorted intervals, keeping degenerate ones; `drop_degenerate` strips
// measure-zero leftovers (used for set-operation outputs).
std::vector<Interval> merge_sorted(std::vector<Interval> ivs,
                                   bool drop_degenerate) {
    std::vector<Interval> out;
    for (const Interval& iv : ivs) {
        if (!out.empty() && iv.lo <= out.back().hi + kMergeTol) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    if (drop_degenerate) {
        std::erase_if(out, [](const Interval& iv) { return iv.length() <= 0.0; });
    }
    return out;
}

}  // namespace

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
    for (const Interval& iv : raw) check_endpoints(iv);
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    IntervalSet s;
    s.intervals_ = merge_sorted(std::move(raw), /*drop_degenerate=*/false);
    return s;
}

IntervalSet IntervalSet::of(double lo, double hi) {
    return normalize({Interval{lo, hi}});
}

IntervalSet IntervalSet::parse(std::string_view literal) {
    std::vector<Interval> ivs;
    size_t pos = 0;
    while (pos < literal.size()) {
        size_t end = literal.find(';', pos);
        if (end == std::string_view::npos) end = literal.size();
        std::string_view pair = literal.substr(pos, end - pos);
        size_t comma = pair.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("interval literal: expected lo,hi pair");
        }
        auto to_double = [](std::string_view sv) {
            std::string s(sv);
            size_t used = 0;
            double x;
            try {
                x = std::stod(s, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("interval literal: bad number '" + s +
                                            "'");
            }
            while (used < s.size() && (s[used] == ' ' || s[used] == '\t')) ++used;
            if (used != s.size()) {
                throw std::invalid_argument("interval literal: bad number '" + s +
                                            "'");
            }
            return x;
        };
        ivs.push_back(Interval{to_double(pair.substr(0, comma)),
                               to_double(pair.substr(comma + 1))});
        pos = end + (end < literal.size() ? 1 : 0);
    }
    return normalize(std::move(ivs));
}

double IntervalSet::measure() const {
    double total = 0.0;
    for (const Interval& iv : intervals_) total += iv.length();
    return total;
}

bool IntervalSet::contains(double t) const {
    auto it = std::upper_bound(
        intervals_.begin(), intervals_.end(), t,
        [](double x, const Interval& iv) { return x < iv.lo; });
    if (it == intervals_.begin()) return false;
    --it;
    return t <= it->hi;
}

std::string IntervalSet::to_literal() const {
    std::string out;
    char buf[64];
    for (size_t i = 0; i < intervals_.size(); ++i) {
        if (i > 0) out += ';';
        std::snprintf(buf, sizeof buf, "%.9g,%.9g", intervals_[i].lo,
                      intervals_[i].hi);
        out += buf;
    }
    return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) {
        return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
    });
    return IntervalSet::normalize(merge_sorted(std::move(all), true));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    const auto& av = a.intervals();
    const auto& bv = b.intervals();
    size_t i = 0, j = 0;
    while (i < av.size() && j < bv.size()) {
        double lo = std::max(av[i].lo, bv[j].lo);
        double hi = std::min(av[i].hi, bv[j].hi);
        if (hi > lo) out.push_back(Interval{lo, hi});
        // advance whichever interval ends first
        if (av[i].hi < bv[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalSet::normalize(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    const auto& bv = b.intervals();
    for (const Interval& iv : a.intervals()) {
        double cursor = iv.lo;
        for (const Interval& cut : bv) {
            if (cut.hi <= cursor) continue;
            if (cut.lo >= iv.hi) break;
            if (cut.lo > cursor) out.push_back(Interval{cursor, cut.lo});
            cursor = std::max(cursor, cut.hi);
            if (cursor >= iv.hi) break;
        }
        if (cursor < iv.hi) out.push_back(Interval{cursor, iv.hi});
    }
    std::erase_if(out, [](const Interval& iv) { return iv.length() <= 0.0; });
    return IntervalSet::normalize(std::move(out));
}

}  // namespace electoral
