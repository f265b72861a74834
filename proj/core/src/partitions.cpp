#include <fps/partitions.hpp>

namespace fps
{

namespace
{

// Chooses r_part for part = n, n-1, ..., 1 so that the weighted sum reaches n.
void enumerate(unsigned part, unsigned weight_left, unsigned count_left, std::vector<unsigned> &current,
               std::vector<std::vector<unsigned>> &out)
{
    if (part == 0) {
        if (weight_left == 0) {
            current[0] = count_left;
            out.push_back(current);
        }
        return;
    }
    for (unsigned r = 0; r * part <= weight_left && r <= count_left; ++r) {
        current[part] = r;
        enumerate(part - 1, weight_left - r * part, count_left - r, current, out);
    }
    current[part] = 0;
}

} // namespace

partition_set::partition_set(unsigned n, unsigned s) : m_n(n), m_s(s)
{
    std::vector<unsigned> current(n + 1, 0);
    enumerate(n, n, s, current, m_elements);
}

} // namespace fps
