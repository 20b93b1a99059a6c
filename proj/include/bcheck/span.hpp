#pragma once

#include <string>

namespace bcheck {

// 1-based source location range; start <= end in document order.
struct SourceSpan {
    int start_line = 1;
    int start_col = 1;
    int end_line = 1;
    int end_col = 1;

    static SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
        SourceSpan s = a;
        if (b.start_line < s.start_line ||
            (b.start_line == s.start_line && b.start_col < s.start_col)) {
            s.start_line = b.start_line;
            s.start_col = b.start_col;
        }
        if (b.end_line > s.end_line ||
            (b.end_line == s.end_line && b.end_col > s.end_col)) {
            s.end_line = b.end_line;
            s.end_col = b.end_col;
        }
        return s;
    }

    bool contains(const SourceSpan& inner) const {
        bool start_ok = start_line < inner.start_line ||
                        (start_line == inner.start_line && start_col <= inner.start_col);
        bool end_ok = end_line > inner.end_line ||
                      (end_line == inner.end_line && end_col >= inner.end_col);
        return start_ok && end_ok;
    }

    std::string to_string() const {
        return std::to_string(start_line) + ":" + std::to_string(start_col);
    }
};

} // namespace bcheck
