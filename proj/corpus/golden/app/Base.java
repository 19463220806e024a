package app;

public class Base extends Foo {
    protected SomeDAO m_oDAO;

    public Base() {
        m_oDAO = new SomeDAO();
    }

    public int helper() {
        return m_oDAO.getDAOMember() + 1;
    }
}
