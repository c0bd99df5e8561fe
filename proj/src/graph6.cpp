#include "oddminor/graph6.hpp"

namespace oddminor {

namespace {
    constexpr std::string_view header = ">>graph6<<";
    constexpr int bias = 63;

    std::size_t body_length(int n)
    {
        const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
        return (bits + 5) / 6;
    }
}

Graph parse_graph6(std::string_view line)
{
    if (line.starts_with(header))
        line.remove_prefix(header.size());
    if (line.ends_with('\n'))
        line.remove_suffix(1);
    if (line.ends_with('\r'))
        line.remove_suffix(1);

    if (line.empty())
        throw MalformedGraph6("empty graph6 string");
    for (char ch : line)
        if (ch < 63 || ch > 126)
            throw MalformedGraph6("character code " + std::to_string(static_cast<int>(static_cast<unsigned char>(ch)))
                    + " outside the graph6 range");

    const int n = line[0] - bias;
    if (n == 63)
        throw MalformedGraph6("long-form graph6 (n >= 63) is not supported");
    line.remove_prefix(1);

    if (line.size() != body_length(n))
        throw MalformedGraph6("expected " + std::to_string(body_length(n)) + " data characters for n = "
                + std::to_string(n) + ", got " + std::to_string(line.size()));

    std::vector<std::uint64_t> rows(n, 0);
    std::size_t bit = 0;
    auto read_bit = [&] (std::size_t k) {
        int chunk = line[k / 6] - bias;
        return (chunk >> (5 - k % 6)) & 1;
    };
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i, ++bit)
            if (read_bit(bit)) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
    for (std::size_t k = bit ; k < line.size() * 6 ; ++k)
        if (read_bit(k))
            throw MalformedGraph6("nonzero padding bits");

    return Graph::from_rows(n, std::move(rows));
}

std::string to_graph6(const Graph & g)
{
    const int n = g.order();
    std::string out(1 + body_length(n), static_cast<char>(bias));
    out[0] = static_cast<char>(bias + n);
    std::size_t bit = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i, ++bit)
            if (g.adjacent(i, j))
                out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    return out;
}

} // namespace oddminor
