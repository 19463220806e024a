typedef int Gram;
typedef Gram Weight;

class TeWeight {
public:
    TeWeight() : m_iGram(0) {}

    Weight total(Gram a, Gram b) { return a + b; }

    size_t count() { return m_iGram; }

    ULONG big() { return m_iGram; }

private:
    Gram m_iGram;
};
