#include "Foo.h"
#include "SomeDAO.h"

class Base : public Foo, public SomeDAO {
public:
    int helper() { return getDAOMember() + 1; }
};
