#include "posetsim/runfile.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace posetsim {

namespace {

struct Row {
    std::size_t line = 0;
    Element id;
    std::size_t cls = 0;
    std::size_t rank = 0;
};

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

std::size_t parse_positive(std::string_view field, std::size_t line, const char* what) {
    constexpr std::size_t kMaxIndex = 1000000;
    std::size_t value = 0;
    if (field.empty()) {
        throw ParseError(line, std::string(what) + " column is empty");
    }
    for (char ch : field) {
        if (ch < '0' || ch > '9') {
            throw ParseError(line, std::string(what) + " '" + std::string(field) +
                                       "' is not a positive integer");
        }
        value = value * 10 + static_cast<std::size_t>(ch - '0');
        if (value > kMaxIndex) {
            throw ParseError(line, std::string(what) + " index exceeds " +
                                       std::to_string(kMaxIndex));
        }
    }
    if (value == 0) {
        throw ParseError(line, std::string(what) + " indices are 1-based");
    }
    return value;
}

// class -> elements, checking that class indices leave no gap.
std::vector<ElementSet> group_classes(const std::vector<Row>& rows) {
    std::size_t max_class = 0;
    for (const Row& row : rows) {
        max_class = std::max(max_class, row.cls);
    }
    std::vector<ElementSet> classes(max_class);
    for (const Row& row : rows) {
        if (!classes[row.cls - 1].insert(row.id).second) {
            throw InvariantViolation("duplicate element '" + row.id + "'");
        }
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].empty()) {
            throw InvariantViolation("class " + std::to_string(i + 1) + " is empty");
        }
    }
    return classes;
}

std::vector<Chain> group_chains(const std::vector<Row>& rows) {
    std::size_t max_class = 0;
    for (const Row& row : rows) {
        max_class = std::max(max_class, row.cls);
    }
    std::vector<std::map<std::size_t, Element>> by_rank(max_class);
    for (const Row& row : rows) {
        if (!by_rank[row.cls - 1].emplace(row.rank, row.id).second) {
            throw InvariantViolation("rank " + std::to_string(row.rank) + " of class " +
                                     std::to_string(row.cls) + " is assigned twice");
        }
    }
    std::vector<Chain> chains;
    chains.reserve(max_class);
    for (std::size_t c = 0; c < max_class; ++c) {
        if (by_rank[c].empty()) {
            throw InvariantViolation("class " + std::to_string(c + 1) + " is empty");
        }
        std::vector<Element> sequence;
        sequence.reserve(by_rank[c].size());
        std::size_t expected = 1;
        for (const auto& [rank, id] : by_rank[c]) {
            if (rank != expected) {
                throw InvariantViolation("rank gap in class " + std::to_string(c + 1) +
                                         ": expected rank " + std::to_string(expected));
            }
            sequence.push_back(id);
            ++expected;
        }
        chains.emplace_back(std::move(sequence));
    }
    return chains;
}

}  // namespace

ResultSet parse_runfile(std::string_view text, std::string label) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    std::optional<Shape> shape;
    std::vector<Row> rows;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view line = strip_cr(
            text.substr(start, end == std::string_view::npos ? text.size() - start : end - start));
        ++line_no;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;

        if (line_no == 1) {
            if (line.rfind("#type:", 0) != 0) {
                throw ParseError(1, "run files start with '#type: <shape>'");
            }
            std::string_view name = line.substr(6);
            while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) {
                name.remove_prefix(1);
            }
            shape = shape_from_name(name);
            if (!shape) {
                throw ParseError(1, "unknown shape '" + std::string(name) + "'");
            }
            continue;
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }

        const auto fields = split_tabs(line);
        const std::size_t expected =
            *shape == Shape::Antichain || *shape == Shape::Chain ? 1
            : *shape == Shape::PartitionOfChains                 ? 3
                                                                 : 2;
        if (fields.size() != expected) {
            throw ParseError(line_no, "expected " + std::to_string(expected) +
                                          " tab-separated column(s), got " +
                                          std::to_string(fields.size()));
        }
        Row row;
        row.line = line_no;
        row.id = std::string(fields[0]);
        if (row.id.empty()) {
            throw ParseError(line_no, "empty element id");
        }
        if (expected >= 2) {
            row.cls = parse_positive(fields[1], line_no, "class");
        }
        if (expected == 3) {
            row.rank = parse_positive(fields[2], line_no, "rank");
        }
        rows.push_back(std::move(row));
    }
    if (!shape) {
        throw ParseError(1, "empty run file");
    }

    switch (*shape) {
        case Shape::Antichain: {
            ElementSet elements;
            for (const Row& row : rows) {
                if (!elements.insert(row.id).second) {
                    throw InvariantViolation("duplicate element '" + row.id + "'");
                }
            }
            return ResultSet{Antichain(std::move(elements)), std::move(label)};
        }
        case Shape::Chain: {
            std::vector<Element> sequence;
            sequence.reserve(rows.size());
            for (const Row& row : rows) {
                sequence.push_back(row.id);
            }
            return ResultSet{Chain(std::move(sequence)), std::move(label)};
        }
        case Shape::Partition:
            return ResultSet{Partition(group_classes(rows)), std::move(label)};
        case Shape::OrderedPartition:
            return ResultSet{OrderedPartition(group_classes(rows)), std::move(label)};
        case Shape::PartitionOfChains:
            return ResultSet{PartitionOfChains(group_chains(rows)), std::move(label)};
    }
    throw ParseError(1, "unknown shape");
}

std::string serialize_runfile(const ResultSet& rs) {
    std::ostringstream out;
    out << "#type: " << shape_name(rs.shape()) << '\n';
    std::visit(
        [&out](const auto& value) {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Antichain>) {
                for (const Element& e : value.elements()) {
                    out << e << '\n';
                }
            } else if constexpr (std::is_same_v<T, Chain>) {
                for (const Element& e : value.sequence()) {
                    out << e << '\n';
                }
            } else if constexpr (std::is_same_v<T, Partition> ||
                                 std::is_same_v<T, OrderedPartition>) {
                for (std::size_t c = 0; c < value.class_count(); ++c) {
                    for (const Element& e : value.classes()[c]) {
                        out << e << '\t' << c + 1 << '\n';
                    }
                }
            } else {
                for (std::size_t c = 0; c < value.chain_count(); ++c) {
                    const auto& sequence = value.chains()[c].sequence();
                    for (std::size_t r = 0; r < sequence.size(); ++r) {
                        out << sequence[r] << '\t' << c + 1 << '\t' << r + 1 << '\n';
                    }
                }
            }
        },
        rs.value);
    return out.str();
}

Qrels parse_qrels(std::string_view text) {
    Qrels qrels;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view line = strip_cr(
            text.substr(start, end == std::string_view::npos ? text.size() - start : end - start));
        ++line_no;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line.find_first_of(" \t") != std::string_view::npos) {
            throw ParseError(line_no, "qrels lines hold a single element id");
        }
        qrels.relevant.insert(std::string(line));
    }
    return qrels;
}

}  // namespace posetsim
