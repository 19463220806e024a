package app;

public class DbRecord {
    public int getId() {
        return 0;
    }

    public void save() {
    }
}
