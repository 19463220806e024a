package app;

public class Bar extends Foo {
    protected SomeDAO m_oDAO;
    private int m_iCount;

    public Bar(int id) {
        super();
        m_oDAO = new SomeDAO(id);
        m_iCount = 0;
    }

    public int total() {
        return getFooValue() + m_oDAO.getDAOMember();
    }

    public void update(int v) {
        m_oDAO.setDAOMember(v);
        m_oDAO.m_iRow = v;
        m_iCount = m_iCount + 1;
    }
}
