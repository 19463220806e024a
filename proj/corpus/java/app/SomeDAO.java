package app;

public class SomeDAO extends DbRecord {
    public int m_iRow;
    private int m_iMember;

    public SomeDAO() {
    }

    public SomeDAO(int id) {
        m_iRow = id;
    }

    public int getDAOMember() {
        return m_iMember;
    }

    public void setDAOMember(int v) {
        m_iMember = v;
    }
}
