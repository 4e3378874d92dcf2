#pragma once

// Line-oriented loop files:
//   # comment
//   loop <name>
//   order <n>
//   <n rows of n whitespace-separated integers, elements 0-based>
//   end
//
// Loops are validated on ingestion and relabelled so the identity is element
// 0; names must be unique within a file.

#include <sstream>
#include <string>
#include <vector>

#include "loopkit/theoremlab.hpp"

namespace loopkit {

struct LoopFile {
    std::vector<NamedLoop> loops;

    const NamedLoop* find(const std::string& name) const {
        for (const auto& nl : loops)
            if (nl.name == name) return &nl;
        return nullptr;
    }
};

struct LoopFileError final : Error {
    int line;

    LoopFileError(int line_, const std::string& message)
        : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

inline LoopFile parse_loop_file(const std::string& text) {
    LoopFile file;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_content = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            out = line.substr(a, line.find_last_not_of(" \t\r") - a + 1);
            return true;
        }
        return false;
    };

    std::string content;
    while (next_content(content)) {
        std::istringstream ls(content);
        std::string kw, name, extra;
        ls >> kw >> name;
        if (kw != "loop" || name.empty() || (ls >> extra))
            throw LoopFileError(lineno, "expected 'loop <name>'");
        if (file.find(name)) throw LoopFileError(lineno, "duplicate loop name '" + name + "'");

        if (!next_content(content)) throw LoopFileError(lineno, "expected 'order <n>'");
        std::istringstream os(content);
        std::string okw;
        long n = 0;
        if (!(os >> okw >> n) || okw != "order" || n < 1 || n > kMaxOrder || (os >> extra))
            throw LoopFileError(lineno, "expected 'order <n>' with 1 <= n <= 64");

        std::vector<std::vector<elem>> table;
        for (long r = 0; r < n; ++r) {
            if (!next_content(content))
                throw LoopFileError(lineno, "loop '" + name + "': expected " + std::to_string(n) + " rows");
            std::istringstream rs(content);
            std::vector<elem> row;
            long v;
            while (rs >> v) row.push_back(static_cast<elem>(v));
            if (!rs.eof()) throw LoopFileError(lineno, "loop '" + name + "': malformed row");
            if (static_cast<long>(row.size()) != n)
                throw LoopFileError(lineno, "loop '" + name + "': row has " +
                                                std::to_string(row.size()) + " entries, expected " +
                                                std::to_string(n));
            table.push_back(std::move(row));
        }
        if (!next_content(content) || content != "end")
            throw LoopFileError(lineno, "loop '" + name + "': expected 'end'");

        try {
            file.loops.push_back({name, FiniteLoop::validate(table).normalized()});
        } catch (const Error& e) {
            throw LoopFileError(lineno, "loop '" + name + "': " + e.what());
        }
    }
    return file;
}

inline std::string print_loop_block(const std::string& name, const FiniteLoop& l,
                                    const std::string& comment = "") {
    std::string out;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string cline;
        while (std::getline(cs, cline)) out += "# " + cline + "\n";
    }
    out += "loop " + name + "\n";
    out += "order " + std::to_string(l.order()) + "\n";
    for (elem x = 0; x < l.order(); ++x) {
        for (elem y = 0; y < l.order(); ++y) {
            if (y) out += ' ';
            out += std::to_string(l.mul(x, y));
        }
        out += '\n';
    }
    out += "end\n";
    return out;
}

inline std::string print_loop_file(const LoopFile& file) {
    std::string out;
    for (std::size_t i = 0; i < file.loops.size(); ++i) {
        if (i) out += '\n';
        out += print_loop_block(file.loops[i].name, file.loops[i].loop);
    }
    return out;
}

}  // namespace loopkit
