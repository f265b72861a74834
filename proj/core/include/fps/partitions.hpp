#ifndef FPS_PARTITIONS_HPP
#define FPS_PARTITIONS_HPP

#include <vector>

namespace fps
{

// All tuples (r_0, ..., r_n) of nonnegative integers with
// r_0 + ... + r_n = s and r_1 + 2 r_2 + ... + n r_n = n.
// These index the multinomial expansion of the n-th coefficient of f^s.
class partition_set
{
public:
    partition_set(unsigned n, unsigned s);

    unsigned n() const noexcept
    {
        return m_n;
    }
    unsigned s() const noexcept
    {
        return m_s;
    }
    const std::vector<std::vector<unsigned>> &elements() const noexcept
    {
        return m_elements;
    }
    auto begin() const noexcept
    {
        return m_elements.begin();
    }
    auto end() const noexcept
    {
        return m_elements.end();
    }
    std::size_t size() const noexcept
    {
        return m_elements.size();
    }

private:
    unsigned m_n;
    unsigned m_s;
    std::vector<std::vector<unsigned>> m_elements;
};

} // namespace fps

#endif
