#include "Foo.h"
#include "SomeDAO.h"

class Bar : public Foo, public SomeDAO {
public:
    Bar(int id) : Foo(), SomeDAO(id), m_iCount(0) {}

    int total() { return getFooValue() + getDAOMember(); }

    void update(int v) {
        setDAOMember(v);
        m_iRow = v;
        m_iCount = m_iCount + 1;
    }

private:
    int m_iCount;
};
