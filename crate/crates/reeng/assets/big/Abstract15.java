public abstract class Abstract15 extends State {
}
