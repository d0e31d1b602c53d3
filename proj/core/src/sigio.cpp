#include "mcgdim/sigio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

#include "mcgdim/arith.hpp"

namespace mcgdim {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= text_.size())
            throw parse_error(pos_, "", std::string("expected '") + c + "' (" + what +
                                            "), found end of input");
        if (text_[pos_] != c)
            throw parse_error(pos_, "", std::string("expected '") + c + "' (" + what +
                                            "), found '" + text_[pos_] + "'");
        ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::int64_t integer(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error(pos_, "", std::string("expected ") + what + " (unsigned integer)");
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int d = text_[pos_] - '0';
            if (v > (INT64_MAX - d) / 10)
                throw parse_error(start, what, std::string(what) + " exceeds 64-bit range");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    void expect_end() {
        skip_ws();
        if (pos_ < text_.size())
            throw parse_error(pos_, "", std::string("unexpected trailing text '") +
                                            text_[pos_] + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::int64_t order_value(Cursor& cur, const char* field) {
    cur.skip_ws();
    std::size_t at = cur.pos();
    std::int64_t v = cur.integer(field);
    if (v < 2) throw parse_error(at, field, std::string(field) + " must be >= 2");
    return v;
}

} // namespace

OrbifoldSignature parse_signature(std::string_view text) {
    Cursor cur(text);
    OrbifoldSignature sig;

    cur.expect('(', "signature opener");
    cur.skip_ws();
    std::size_t genus_at = cur.pos();
    std::int64_t genus = cur.integer("genus");
    if (genus > 1000000) throw parse_error(genus_at, "genus", "genus out of supported range");
    sig.genus = static_cast<int>(genus);
    cur.expect(';', "after genus");

    cur.skip_ws();
    std::size_t orient_at = cur.pos();
    if (cur.try_consume('+')) {
        sig.orientable = true;
    } else if (cur.try_consume('-')) {
        sig.orientable = false;
    } else {
        throw parse_error(orient_at, "", "expected orientability '+' or '-'");
    }
    cur.expect(';', "after orientability");

    cur.expect('[', "elliptic list opener");
    if (!cur.try_consume('-')) {
        do {
            sig.elliptic_orders.push_back(order_value(cur, "elliptic order"));
        } while (cur.try_consume(','));
    }
    cur.expect(']', "elliptic list closer");
    cur.expect(';', "after elliptic list");

    cur.expect('{', "boundary list opener");
    if (!cur.try_consume('-')) {
        do {
            cur.expect('(', "boundary component opener");
            BoundaryComponent bc;
            if (!cur.peek_is(')')) {
                do {
                    bc.corner_orders.push_back(order_value(cur, "corner order"));
                } while (cur.try_consume(','));
            }
            cur.expect(')', "boundary component closer");
            sig.boundaries.push_back(std::move(bc));
        } while (cur.try_consume(','));
    }
    cur.expect('}', "boundary list closer");
    cur.expect(')', "signature closer");
    cur.expect_end();

    if (!sig.orientable && sig.genus == 0)
        throw parse_error(genus_at, "genus", "non-orientable signatures require genus >= 1");

    return canonical(sig);
}

std::string render_signature(const OrbifoldSignature& o) {
    OrbifoldSignature c = canonical(o);
    std::ostringstream out;
    out << '(' << c.genus << "; " << (c.orientable ? '+' : '-') << "; [";
    if (c.elliptic_orders.empty()) {
        out << '-';
    } else {
        for (std::size_t i = 0; i < c.elliptic_orders.size(); ++i) {
            if (i) out << ',';
            out << c.elliptic_orders[i];
        }
    }
    out << "]; {";
    if (c.boundaries.empty()) {
        out << '-';
    } else {
        for (std::size_t i = 0; i < c.boundaries.size(); ++i) {
            if (i) out << ", ";
            out << '(';
            const auto& orders = c.boundaries[i].corner_orders;
            for (std::size_t j = 0; j < orders.size(); ++j) {
                if (j) out << ',';
                out << orders[j];
            }
            out << ')';
        }
    }
    out << "})";
    return out.str();
}

std::vector<ActionRow> ingest_actions(std::istream& in) {
    std::vector<ActionRow> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == '\n')) sv.remove_suffix(1);
        std::size_t first = sv.find_first_not_of(" \t");
        if (first == std::string_view::npos || sv[first] == '#') continue;

        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = sv.find('\t', start);
            if (tab == std::string_view::npos) {
                fields.push_back(sv.substr(start));
                break;
            }
            fields.push_back(sv.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() < 3 || fields.size() > 4)
            throw ingest_error(lineno, "expected 3 or 4 tab-separated fields, found " +
                                           std::to_string(fields.size()));

        ActionRow row;
        try {
            row.genus = std::stoi(std::string(fields[0]));
            row.order = std::stoll(std::string(fields[1]));
        } catch (const std::exception&) {
            throw ingest_error(lineno, "genus and order must be integers");
        }
        if (row.genus < 1) throw ingest_error(lineno, "genus must be >= 1");
        if (row.order < 1) throw ingest_error(lineno, "order must be >= 1");

        try {
            row.signature = parse_signature(fields[2]);
        } catch (const parse_error& e) {
            throw ingest_error(lineno, std::string("bad signature: ") + e.what());
        }

        if (fields.size() == 4) {
            int lam = 0;
            try {
                lam = std::stoi(std::string(fields[3]));
            } catch (const std::exception&) {
                throw ingest_error(lineno, "lambda_max must be an integer");
            }
            if (lam < 0 || lam > prime_factor_count(row.order))
                throw ingest_error(lineno,
                                   "lambda_max outside [0, prime factor count of order]");
            row.lambda_max = lam;
        }

        auto forced = rh_order(row.signature, row.genus);
        if (!forced || *forced != row.order)
            throw ingest_error(lineno, "order " + std::to_string(row.order) +
                                           " is not the order forced by the quotient's Euler "
                                           "characteristic" +
                                           (forced ? " (" + std::to_string(*forced) + ")" : ""));
        rows.push_back(std::move(row));
    }

    auto key = [](const ActionRow& r) {
        return std::tuple<int, std::int64_t, std::string>(r.genus, -r.order,
                                                          render_signature(r.signature));
    };
    std::sort(rows.begin(), rows.end(),
              [&](const ActionRow& a, const ActionRow& b) { return key(a) < key(b); });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [&](const ActionRow& a, const ActionRow& b) {
                               return key(a) == key(b) && a.lambda_max == b.lambda_max;
                           }),
               rows.end());
    return rows;
}

std::vector<ActionRow> load_actions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open actions file: " + path);
    return ingest_actions(in);
}

} // namespace mcgdim
