#include "ratlink/conway.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ratlink {

const char* to_string(SiteOrientation o) {
    return o == SiteOrientation::Horizontal ? "horizontal" : "vertical";
}

const char* to_string(ClosureKind k) {
    return k == ClosureKind::Knot ? "knot" : "2-component link";
}

TwistSequence::TwistSequence(std::vector<int> sites) : sites_(std::move(sites)) {
    if (sites_.empty()) throw Error(Errc::EmptyInput, "no twist sites");
    for (int q : sites_)
        if (q <= 0)
            throw Error(Errc::NonPositiveSite, "site value " + std::to_string(q));
    if (sites_.front() < 2 || sites_.back() < 2)
        throw Error(Errc::FirstOrLastSiteTooSmall,
                    "first and last twist sites need at least 2 crossings");
    int s = static_cast<int>(sites_.size());
    orientations_.reserve(sites_.size());
    for (int i = 1; i <= s; ++i)
        orientations_.push_back((s - i) % 2 == 0 ? SiteOrientation::Horizontal
                                                 : SiteOrientation::Vertical);
    n_ = std::accumulate(sites_.begin(), sites_.end(), 0);
}

std::string TwistSequence::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < sites_.size(); ++k) {
        if (k) os << ' ';
        os << sites_[k];
    }
    return os.str();
}

TwistSequence parse_conway(const std::string& text) {
    bool has_separator = false;
    for (char ch : text)
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') has_separator = true;

    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;

    std::vector<int> sites;
    if (!has_separator) {
        if (trimmed.empty()) throw Error(Errc::EmptyInput, "empty Conway notation");
        for (char ch : trimmed) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw Error(Errc::ParseError, std::string("unexpected character '") + ch + "'");
        }
        if (trimmed.size() == 1) {
            sites.push_back(trimmed[0] - '0');
        } else {
            // Compact digit string: one site per digit.
            for (char ch : trimmed) sites.push_back(ch - '0');
        }
    } else {
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            std::size_t pos = 0;
            bool negative = token[0] == '-';
            for (std::size_t k = negative ? 1 : 0; k < token.size(); ++k) {
                if (!std::isdigit(static_cast<unsigned char>(token[k])))
                    throw Error(Errc::ParseError, "bad token '" + token + "'");
            }
            if (token == "-") throw Error(Errc::ParseError, "bad token '-'");
            long v = 0;
            try {
                v = std::stol(token, &pos);
            } catch (const std::exception&) {
                throw Error(Errc::ParseError, "bad token '" + token + "'");
            }
            if (v <= 0) throw Error(Errc::NonPositiveSite, "site value " + token);
            if (v > 1'000'000) throw Error(Errc::ParseError, "site value out of range: " + token);
            sites.push_back(static_cast<int>(v));
            token.clear();
        };
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',')
                flush();
            else
                token += ch;
        }
        flush();
        if (sites.empty()) throw Error(Errc::EmptyInput, "empty Conway notation");
    }
    return TwistSequence(std::move(sites));
}

ClosureKind predict_components(const TwistSequence& seq) {
    // mate[p] = post whose strand end currently pairs with the end at post p.
    // Posts: 0=NW 1=NE 2=SW 3=SE.
    constexpr int NW = 0, NE = 1, SW = 2, SE = 3;
    std::array<int, 4> mate{};
    if (seq.orientation(1) == SiteOrientation::Horizontal) {
        mate = {NE, NW, SE, SW}; // 0-tangle: top strand NW-NE, bottom SW-SE
    } else {
        mate = {SW, SE, NW, NE}; // infinity-tangle: left strand NW-SW, right NE-SE
    }
    auto swap_ends = [&mate](int a, int b) {
        int ma = mate[a], mb = mate[b];
        if (ma == b) return; // the two ends belong to one strand; crossing it changes nothing
        mate[a] = mb;
        mate[b] = ma;
        mate[ma] = b;
        mate[mb] = a;
    };
    for (int k = 1; k <= seq.site_count(); ++k) {
        if (seq.site(k) % 2 == 0) continue; // an even twist restores the pairing
        if (seq.orientation(k) == SiteOrientation::Horizontal)
            swap_ends(NE, SE);
        else
            swap_ends(SW, SE);
    }
    return (mate[NW] == NE && mate[SW] == SE) ? ClosureKind::TwoComponentLink : ClosureKind::Knot;
}

namespace {

void compositions(int total, bool first, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        if (!cur.empty() && cur.back() >= 2) out.push_back(cur);
        return;
    }
    int lo = first ? 2 : 1;
    for (int q = lo; q <= total; ++q) {
        cur.push_back(q);
        compositions(total - q, false, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<TwistSequence> enumerate_sequences(int max_crossings, ClosureKind kind) {
    std::vector<TwistSequence> out;
    for (int n = 2; n <= max_crossings; ++n) {
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        compositions(n, true, cur, all);
        for (auto& sites : all) {
            TwistSequence seq(std::move(sites));
            if (predict_components(seq) == kind) out.push_back(std::move(seq));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ratlink
