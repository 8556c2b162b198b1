public abstract class Abstract19 extends State {
}
