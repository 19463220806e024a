package te;

public class TeWeight {
    private int m_iGram;

    public TeWeight() {
        m_iGram = 0;
    }

    public int total(int a, int b) {
        return a + b;
    }

    public long count() {
        return m_iGram;
    }

    public long big() {
        return m_iGram;
    }
}
